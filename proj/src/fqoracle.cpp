#include "chromgl/fqoracle.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "chromgl/parallel.hpp"

namespace chromgl {

namespace {

std::atomic<bool> g_allow_large{false};

constexpr std::size_t idx(int i, int j) { return static_cast<std::size_t>(i * kMaxMatrixSize + j); }

int inverse_mod(int x, int q) {
  for (int y = 1; y < q; ++y) {
    if ((x * y) % q == 1) return y;
  }
  throw DivisionByZero("no inverse of " + std::to_string(x) + " mod " + std::to_string(q));
}

long ipow(long b, int e) {
  long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

void check_matrix_size(int n) {
  if (n < 0 || n > kMaxMatrixSize) throw SizeGuard("matrix size " + std::to_string(n) + " outside [0, 5]");
}

void check_class_fn(int n, int q) {
  check_field(q);
  if (n < 0 || n > kMaxClassFnSize) {
    throw SizeGuard("superclass functions are supported for n <= " + std::to_string(kMaxClassFnSize) + ", got " +
                    std::to_string(n));
  }
}

void check_group(int n, int q) {
  check_field(q);
  check_matrix_size(n);
  const long limit = g_allow_large ? kLargeGroupLimit : kGroupLimit;
  if (gl_order(n, q) > limit) {
    throw SizeGuard("|GL_" + std::to_string(n) + "(F_" + std::to_string(q) + ")| = " + gl_order(n, q).get_str() +
                    " exceeds the enumeration limit " + std::to_string(limit) +
                    (g_allow_large ? "" : " (large groups are disabled)"));
  }
}

EdgeSet label_bits(const Matrix& u) {
  const int n = u.n;
  EdgeSet out;
  for (int i = 0; i < n; ++i) {
    for (int l = i + 1; l < n; ++l) {
      bool zero = true;
      for (int j = i; j < l && zero; ++j) {
        for (int k = j + 1; k <= l; ++k) {
          if (u.at(j, k) != 0) {
            zero = false;
            break;
          }
        }
      }
      if (zero) out.insert(i + 1, l + 1);
    }
  }
  return out;
}

bool in_pattern(const Matrix& u, EdgeSet edges) {
  if (!is_unipotent_upper(u)) return false;
  for (auto [i, j] : edges.pairs()) {
    if (u.at(i - 1, j - 1) != 0) return false;
  }
  return true;
}

// x^{-1} y x
Matrix conjugate(const Matrix& xinv, const Matrix& y, const Matrix& x) { return xinv * (y * x); }

// Calls body(chunk, x, x^{-1}) for every x in GL_n(F_q), split into chunks.
constexpr std::size_t kChunks = 64;

void for_each_invertible(int n, int q, const std::function<void(std::size_t, const Matrix&, const Matrix&)>& body) {
  check_group(n, q);
  const int cells = n * n;
  const long total = ipow(q, cells);
  const auto chunks = static_cast<std::size_t>(std::min<long>(static_cast<long>(kChunks), total));
  parallel_for(chunks, [&](std::size_t chunk) {
    const long begin = total * static_cast<long>(chunk) / static_cast<long>(chunks);
    const long end = total * static_cast<long>(chunk + 1) / static_cast<long>(chunks);
    Matrix x(n, q);
    long v = begin;
    for (int c = 0; c < cells; ++c) {
      x.a[idx(c / n, c % n)] = static_cast<std::uint8_t>(v % q);
      v /= q;
    }
    Matrix xinv(n, q);
    for (long k = begin; k < end; ++k) {
      if (invert(x, xinv)) body(chunk, x, xinv);
      for (int c = 0; c < cells; ++c) {
        auto& d = x.a[idx(c / n, c % n)];
        if (++d < q) break;
        d = 0;
      }
    }
  });
}

std::vector<Matrix> ut_elements(int n, int q) {
  const int free = n * (n - 1) / 2;
  if (ipow(q, free) > kGroupLimit) throw SizeGuard("UT_n too large to enumerate");
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) cells.emplace_back(i, j);
  }
  std::vector<Matrix> out;
  const long total = ipow(q, free);
  out.reserve(static_cast<std::size_t>(total));
  for (long k = 0; k < total; ++k) {
    Matrix u = Matrix::identity(n, q);
    long v = k;
    for (auto [i, j] : cells) {
      u.set(i, j, static_cast<int>(v % q));
      v /= q;
    }
    out.push_back(u);
  }
  return out;
}

template <typename Fn>
ClassFnUT build(int n, int q, Fn value) {
  check_class_fn(n, q);
  ClassFnUT f{n, q, {}};
  for (const auto& g : indifference_graphs(n)) f.values.emplace(g, value(g));
  return f;
}

void check_same(int n1, int q1, int n2, int q2) {
  if (n1 != n2 || q1 != q2) throw InvalidArgument("class functions over different (n, q)");
}

}  // namespace

void set_allow_large_groups(bool allow) { g_allow_large = allow; }
bool allow_large_groups() { return g_allow_large; }

void check_field(int q) {
  if (q != 2 && q != 3 && q != 5 && q != 7) throw InvalidArgument("q must be a prime <= 7, got " + std::to_string(q));
}

Matrix::Matrix(int size, int field) : n(size), q(field) {
  check_matrix_size(size);
  check_field(field);
}

Matrix Matrix::identity(int size, int field) {
  Matrix m(size, field);
  for (int i = 0; i < std::min(size, kMaxMatrixSize); ++i) m.a[idx(i, i)] = 1;
  return m;
}

Matrix Matrix::parse(const std::string& digits, int field) {
  int n = 0;
  while (n * n < static_cast<int>(digits.size())) ++n;
  if (n * n != static_cast<int>(digits.size())) throw InvalidArgument("matrix string length is not a square: '" + digits + "'");
  Matrix m(n, field);
  for (int k = 0; k < n * n; ++k) {
    const char c = digits[static_cast<std::size_t>(k)];
    if (c < '0' || c - '0' >= field) throw InvalidArgument("bad matrix digit '" + std::string(1, c) + "' for q = " + std::to_string(field));
    m.a[idx(k / n, k % n)] = static_cast<std::uint8_t>(c - '0');
  }
  return m;
}

void Matrix::set(int i, int j, int v) { a[idx(i, j)] = static_cast<std::uint8_t>(((v % q) + q) % q); }

std::string Matrix::str() const {
  std::string s;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) s += static_cast<char>('0' + at(i, j));
  }
  return s;
}

Matrix operator*(const Matrix& x, const Matrix& y) {
  Matrix r;
  r.n = x.n;
  r.q = x.q;
  for (int i = 0; i < x.n; ++i) {
    for (int j = 0; j < x.n; ++j) {
      int s = 0;
      for (int k = 0; k < x.n; ++k) s += x.at(i, k) * y.at(k, j);
      r.a[idx(i, j)] = static_cast<std::uint8_t>(s % x.q);
    }
  }
  return r;
}

Matrix operator-(const Matrix& x, const Matrix& y) {
  Matrix r = x;
  for (int i = 0; i < x.n; ++i) {
    for (int j = 0; j < x.n; ++j) r.set(i, j, x.at(i, j) - y.at(i, j));
  }
  return r;
}

bool invert(const Matrix& x, Matrix& out) {
  const int n = x.n;
  const int q = x.q;
  static thread_local std::array<std::array<int, 8>, 8> inv_table{};
  static thread_local int table_q = 0;
  if (table_q != q) {
    for (int v = 1; v < q; ++v) inv_table[0][static_cast<std::size_t>(v)] = inverse_mod(v, q);
    table_q = q;
  }
  const auto& inv = inv_table[0];
  int w[kMaxMatrixSize][2 * kMaxMatrixSize];
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      w[i][j] = x.at(i, j);
      w[i][n + j] = i == j ? 1 : 0;
    }
  }
  for (int col = 0; col < n; ++col) {
    int p = col;
    while (p < n && w[p][col] == 0) ++p;
    if (p == n) return false;
    if (p != col) {
      for (int j = 0; j < 2 * n; ++j) std::swap(w[p][j], w[col][j]);
    }
    const int s = inv[static_cast<std::size_t>(w[col][col])];
    for (int j = 0; j < 2 * n; ++j) w[col][j] = (w[col][j] * s) % q;
    for (int r = 0; r < n; ++r) {
      if (r == col || w[r][col] == 0) continue;
      const int f = w[r][col];
      for (int j = 0; j < 2 * n; ++j) w[r][j] = ((w[r][j] - f * w[col][j]) % q + q) % q;
    }
  }
  out.n = n;
  out.q = q;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out.a[idx(i, j)] = static_cast<std::uint8_t>(w[i][n + j]);
  }
  return true;
}

Matrix jordan(const Partition& lambda, int q) {
  Matrix m = Matrix::identity(lambda.size(), q);
  int start = 0;
  for (int part : lambda.parts) {
    for (int k = 0; k + 1 < part; ++k) m.set(start + k, start + k + 1, 1);
    start += part;
  }
  return m;
}

bool is_unipotent_upper(const Matrix& u) {
  for (int i = 0; i < u.n; ++i) {
    if (u.at(i, i) != 1) return false;
    for (int j = 0; j < i; ++j) {
      if (u.at(i, j) != 0) return false;
    }
  }
  return true;
}

IndiffGraph superclass_label(const Matrix& u) {
  if (!is_unipotent_upper(u)) throw InvalidArgument("superclass_label: matrix " + u.str() + " is not in UT_n");
  return IndiffGraph(u.n, label_bits(u));
}

BigInt gl_order(int n, int q) {
  BigInt r = 1;
  BigInt qn;
  mpz_ui_pow_ui(qn.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(n));
  BigInt qi = 1;
  for (int i = 0; i < n; ++i) {
    r *= qn - qi;
    qi *= q;
  }
  return r;
}

BigInt ut_order(int n, int q) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(n * (n - 1) / 2));
  return r;
}

BigInt q_factorial(int n, int q) {
  BigInt r = 1;
  for (int i = 1; i <= n; ++i) {
    BigInt num;
    mpz_ui_pow_ui(num.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(i));
    r *= (num - 1) / (q - 1);
  }
  return r;
}

// ---------------------------------------------------------------------------

Rational ClassFnUT::at(const IndiffGraph& gamma) const {
  auto it = values.find(gamma);
  if (it == values.end()) throw InvalidArgument("graph " + gamma.str() + " is not in IG_" + std::to_string(n));
  return it->second;
}

std::string ClassFnUT::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [g, v] : values) {
    os << (first ? "" : ", ") << g.edges.str() << ": " << to_string(v);
    first = false;
  }
  return os.str();
}

ClassFnUT zero_class_fn(int n, int q) {
  return build(n, q, [](const IndiffGraph&) { return Rational(0); });
}

ClassFnUT operator+(const ClassFnUT& a, const ClassFnUT& b) {
  check_same(a.n, a.q, b.n, b.q);
  ClassFnUT r = a;
  for (auto& [g, v] : r.values) v += b.at(g);
  return r;
}

ClassFnUT operator-(const ClassFnUT& a, const ClassFnUT& b) {
  check_same(a.n, a.q, b.n, b.q);
  ClassFnUT r = a;
  for (auto& [g, v] : r.values) v -= b.at(g);
  return r;
}

ClassFnUT operator*(const Rational& c, const ClassFnUT& a) {
  ClassFnUT r = a;
  for (auto& [g, v] : r.values) v *= c;
  return r;
}

ClassFnUT delta(const IndiffGraph& gamma, int q) {
  return build(gamma.n, q, [&](const IndiffGraph& s) { return Rational(s == gamma ? 1 : 0); });
}

ClassFnUT delta_bar(const IndiffGraph& gamma, int q) {
  return build(gamma.n, q, [&](const IndiffGraph& s) { return Rational(gamma.edges.is_subset_of(s.edges) ? 1 : 0); });
}

ClassFnUT chi_bar(const IndiffGraph& gamma, int q) {
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(gamma.edge_count()));
  return Rational(scale) * delta_bar(gamma, q);
}

ClassFnUT chi_super(const IndiffGraph& gamma, int q) {
  ClassFnUT r = zero_class_fn(gamma.n, q);
  for (const auto& [sigma, mu] : mobius_subgraph(gamma)) {
    if (mu != 0) r = r + Rational(static_cast<long>(mu)) * chi_bar(sigma, q);
  }
  return r;
}

ClassFnUT psi_pseudo(const SchroderPath& sigma, int q) {
  const int n = sigma.size();
  const EdgeSet a = area(sigma);
  const auto d = diag(sigma).pairs();
  ClassFnUT r = zero_class_fn(n, q);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d.size()); ++mask) {
    EdgeSet e = a;
    int missing = 0;
    for (std::size_t k = 0; k < d.size(); ++k) {
      if (mask >> k & 1) {
        e.insert(d[k].first, d[k].second);
      } else {
        ++missing;
      }
    }
    if (!is_indifference(e, n)) {
      throw InternalError("psi_pseudo: Area u S = " + e.str() + " is not an indifference edge set for " + sigma.str());
    }
    r = r + Rational(missing % 2 == 0 ? 1 : -1) * chi_bar(IndiffGraph(n, e), q);
  }
  return r;
}

bool psi_mesa_check(const DyckPath& pi, int q) { return psi_pseudo(mesa(pi), q) == chi_super(graph_of(pi), q); }

ClassFnUT chi_bar_coset_oracle(const IndiffGraph& gamma, int q) {
  check_class_fn(gamma.n, q);
  const int n = gamma.n;
  const auto group = ut_elements(n, q);
  std::vector<Matrix> inverses(group.size());
  for (std::size_t k = 0; k < group.size(); ++k) invert(group[k], inverses[k]);
  long subgroup = 0;
  for (const auto& u : group) subgroup += in_pattern(u, gamma.edges) ? 1 : 0;
  std::map<IndiffGraph, const Matrix*> reps;
  for (const auto& u : group) reps.try_emplace(superclass_label(u), &u);
  return build(n, q, [&](const IndiffGraph& s) {
    const Matrix& u = *reps.at(s);
    long fixed = 0;
    for (std::size_t k = 0; k < group.size(); ++k) fixed += in_pattern(conjugate(inverses[k], u, group[k]), gamma.edges) ? 1 : 0;
    Rational r(static_cast<long>(fixed), static_cast<long>(subgroup));
    r.canonicalize();
    return r;
  });
}

const std::map<IndiffGraph, BigInt>& superclass_sizes(int n, int q) {
  check_class_fn(n, q);
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::map<IndiffGraph, BigInt>> cache;
  std::lock_guard lock(mu);
  auto key = std::make_pair(n, q);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::map<IndiffGraph, BigInt> sizes;
  for (const auto& g : indifference_graphs(n)) sizes.emplace(g, 0);
  for (const auto& u : ut_elements(n, q)) sizes.at(superclass_label(u)) += 1;
  return cache.emplace(key, std::move(sizes)).first->second;
}

Rational inner_product_UT(const ClassFnUT& phi, const ClassFnUT& psi) {
  check_same(phi.n, phi.q, psi.n, psi.q);
  Rational s = 0;
  for (const auto& [g, size] : superclass_sizes(phi.n, phi.q)) s += Rational(size) * phi.at(g) * psi.at(g);
  return s / Rational(ut_order(phi.n, phi.q));
}

// ---------------------------------------------------------------------------

Rational UnipClassFn::at(const Partition& lambda) const {
  auto it = values.find(lambda);
  if (it == values.end()) throw InvalidArgument("partition " + lambda.str() + " is not a partition of " + std::to_string(n));
  return it->second;
}

std::string UnipClassFn::str() const {
  std::ostringstream os;
  bool first = true;
  for (auto it = values.rbegin(); it != values.rend(); ++it) {
    os << (first ? "" : ", ") << it->first.str() << ": " << to_string(it->second);
    first = false;
  }
  return os.str();
}

UnipClassFn operator+(const UnipClassFn& a, const UnipClassFn& b) {
  check_same(a.n, a.q, b.n, b.q);
  UnipClassFn r = a;
  for (auto& [l, v] : r.values) v += b.at(l);
  return r;
}

UnipClassFn operator*(const Rational& c, const UnipClassFn& a) {
  UnipClassFn r = a;
  for (auto& [l, v] : r.values) v *= c;
  return r;
}

namespace {

// counts[lambda][gamma] = #{x in GL_n : x^{-1} J_lambda x in UT_gamma°}
using InductionTable = std::map<Partition, std::map<IndiffGraph, long>>;

const InductionTable& induction_table(int n, int q) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, InductionTable> cache;
  {
    std::lock_guard lock(mu);
    auto it = cache.find({n, q});
    if (it != cache.end()) return it->second;
  }
  const auto ps = partitions(n);
  std::vector<Matrix> js;
  for (const auto& l : ps) js.push_back(jordan(l, q));
  std::vector<std::vector<std::unordered_map<std::uint64_t, long>>> partial(
      kChunks, std::vector<std::unordered_map<std::uint64_t, long>>(ps.size()));
  for_each_invertible(n, q, [&](std::size_t chunk, const Matrix& x, const Matrix& xinv) {
    for (std::size_t k = 0; k < js.size(); ++k) {
      const Matrix y = conjugate(xinv, js[k], x);
      if (is_unipotent_upper(y)) ++partial[chunk][k][label_bits(y).bits()];
    }
  });
  InductionTable table;
  for (std::size_t k = 0; k < ps.size(); ++k) {
    auto& row = table[ps[k]];
    for (const auto& g : indifference_graphs(n)) row.emplace(g, 0);
    for (const auto& chunk : partial) {
      for (const auto& [bits, c] : chunk[k]) row.at(IndiffGraph(n, EdgeSet(bits))) += c;
    }
  }
  std::lock_guard lock(mu);
  return cache.emplace(std::make_pair(n, q), std::move(table)).first->second;
}

}  // namespace

UnipClassFn induce_to_GL(const ClassFnUT& phi, bool require_integral) {
  check_class_fn(phi.n, phi.q);
  const auto& table = induction_table(phi.n, phi.q);
  const Rational ut(ut_order(phi.n, phi.q));
  UnipClassFn out{phi.n, phi.q, {}};
  for (const auto& [lambda, row] : table) {
    Rational s = 0;
    for (const auto& [g, c] : row) {
      if (c != 0) s += Rational(static_cast<long>(c)) * phi.at(g);
    }
    s /= ut;
    if (require_integral && s.get_den() != 1) {
      throw InternalError("induced character value " + to_string(s) + " at " + lambda.str() + " is not an integer");
    }
    out.values.emplace(lambda, s);
  }
  return out;
}

UnipClassFn induce_trivial_from_pattern(const IndiffGraph& gamma, int q) {
  check_class_fn(gamma.n, q);
  const int n = gamma.n;
  const auto ps = partitions(n);
  std::vector<Matrix> js;
  for (const auto& l : ps) js.push_back(jordan(l, q));
  std::vector<std::vector<long>> partial(kChunks, std::vector<long>(ps.size(), 0));
  for_each_invertible(n, q, [&](std::size_t chunk, const Matrix& x, const Matrix& xinv) {
    for (std::size_t k = 0; k < js.size(); ++k) {
      if (in_pattern(conjugate(xinv, js[k], x), gamma.edges)) ++partial[chunk][k];
    }
  });
  BigInt sub;
  mpz_ui_pow_ui(sub.get_mpz_t(), static_cast<unsigned long>(q),
                static_cast<unsigned long>(n * (n - 1) / 2 - gamma.edge_count()));
  UnipClassFn out{n, q, {}};
  for (std::size_t k = 0; k < ps.size(); ++k) {
    long total = 0;
    for (const auto& p : partial) total += p[k];
    out.values.emplace(ps[k], Rational(BigInt(static_cast<long>(total))) / Rational(sub));
  }
  return out;
}

std::vector<Matrix> flags(int n, int q) {
  check_field(q);
  check_matrix_size(n);
  if (q_factorial(n, q) > kGroupLimit) throw SizeGuard("too many flags to enumerate");
  std::vector<Matrix> out;
  std::vector<int> pivot(static_cast<std::size_t>(n));
  std::iota(pivot.begin(), pivot.end(), 0);
  do {
    // Column k: 1 at its pivot row, zero below it and at earlier pivots,
    // free above.
    std::vector<std::pair<int, int>> free_cells;
    Matrix g(n, q);
    for (int k = 0; k < n; ++k) {
      const int p = pivot[static_cast<std::size_t>(k)];
      g.set(p, k, 1);
      for (int r = 0; r < p; ++r) {
        bool earlier = false;
        for (int j = 0; j < k; ++j) earlier = earlier || pivot[static_cast<std::size_t>(j)] == r;
        if (!earlier) free_cells.emplace_back(r, k);
      }
    }
    const long total = ipow(q, static_cast<int>(free_cells.size()));
    for (long v = 0; v < total; ++v) {
      long rest = v;
      for (auto [r, c] : free_cells) {
        g.set(r, c, static_cast<int>(rest % q));
        rest /= q;
      }
      out.push_back(g);
    }
  } while (std::next_permutation(pivot.begin(), pivot.end()));
  return out;
}

long hessenberg_count(const IndiffGraph& gamma, const Matrix& a) {
  if (gamma.n != a.n) throw InvalidArgument("hessenberg_count: graph and matrix sizes differ");
  if (gamma.n > kMaxClassFnSize || a.q > 3) throw SizeGuard("hessenberg_count is limited to n <= 4, q <= 3");
  long count = 0;
  Matrix ginv;
  for (const Matrix& g : flags(a.n, a.q)) {
    if (!invert(g, ginv)) throw InternalError("flag representative is singular");
    const Matrix m = conjugate(ginv, a, g);
    bool ok = true;
    for (int i = 0; i < a.n && ok; ++i) {
      for (int j = 0; j <= i; ++j) {
        if (m.at(i, j) != 0) {
          ok = false;
          break;
        }
      }
    }
    for (auto [i, j] : gamma.edges.pairs()) ok = ok && m.at(i - 1, j - 1) == 0;
    if (ok) ++count;
  }
  return count;
}

long centralizer_order(const Matrix& g) {
  std::vector<long> partial(kChunks, 0);
  for_each_invertible(g.n, g.q, [&](std::size_t chunk, const Matrix& x, const Matrix&) {
    if (x * g == g * x) ++partial[chunk];
  });
  return std::accumulate(partial.begin(), partial.end(), 0L);
}

}  // namespace chromgl
