#include "chromgl/symfunc.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <utility>

namespace chromgl {

std::string basis_name(Basis b) {
  switch (b) {
    case Basis::M: return "M";
    case Basis::E: return "E";
    case Basis::H: return "H";
    case Basis::P: return "P";
    case Basis::S: return "S";
    case Basis::HLP: return "HLP";
    case Basis::PT: return "PT";
  }
  return "?";
}

Basis parse_basis(const std::string& name) {
  for (Basis b : {Basis::M, Basis::E, Basis::H, Basis::P, Basis::S, Basis::HLP, Basis::PT}) {
    if (basis_name(b) == name) return b;
  }
  throw InvalidArgument("unknown basis '" + name + "'");
}

RationalFunction SymPoly::coeff(const Partition& lambda) const {
  auto it = terms.find(lambda);
  return it == terms.end() ? RationalFunction() : it->second;
}

RationalFunction SymFunc::coeff(const Partition& lambda) const {
  auto it = coeffs.find(lambda);
  return it == coeffs.end() ? RationalFunction() : it->second;
}

Coeffs prune(Coeffs c) {
  std::erase_if(c, [](const auto& kv) { return kv.second.is_zero(); });
  return c;
}

namespace {

void check_degree(int n) {
  if (n < 0 || n > kMaxSymDegree) throw SizeGuard("symmetric function degree " + std::to_string(n) + " outside [0, 8]");
}

std::size_t index_of(const std::vector<Partition>& ps, const Partition& lambda) {
  auto it = std::find(ps.begin(), ps.end(), lambda);
  if (it == ps.end()) throw InvalidArgument("partition " + lambda.str() + " has the wrong size");
  return static_cast<std::size_t>(it - ps.begin());
}

// Number of matrices with row sums `rows`, column sums `cols` and entries in
// [0, cap] (cap = 1 for the elementary basis, unbounded for the complete).
long long count_matrices(const std::vector<int>& rows, std::vector<int> cols, int cap) {
  std::function<long long(std::size_t)> by_row;
  std::function<long long(std::size_t, std::size_t, int)> fill;
  fill = [&](std::size_t r, std::size_t c, int left) -> long long {
    if (c == cols.size()) return left == 0 ? by_row(r + 1) : 0;
    long long total = 0;
    const int hi = std::min({left, cols[c], cap});
    for (int v = 0; v <= hi; ++v) {
      cols[c] -= v;
      total += fill(r, c + 1, left - v);
      cols[c] += v;
    }
    return total;
  };
  by_row = [&](std::size_t r) -> long long {
    if (r == rows.size()) {
      return std::all_of(cols.begin(), cols.end(), [](int x) { return x == 0; }) ? 1 : 0;
    }
    return fill(r, 0, rows[r]);
  };
  return by_row(0);
}

// Number of ways to place the parts of lambda into the blocks of mu so that
// block j receives total mu_j: the monomial coefficient of m_mu in p_lambda.
long long count_power_sum(const std::vector<int>& parts, std::vector<int> blocks) {
  std::function<long long(std::size_t)> rec = [&](std::size_t i) -> long long {
    if (i == parts.size()) {
      return std::all_of(blocks.begin(), blocks.end(), [](int x) { return x == 0; }) ? 1 : 0;
    }
    long long total = 0;
    for (auto& b : blocks) {
      if (b >= parts[i]) {
        b -= parts[i];
        total += rec(i + 1);
        b += parts[i];
      }
    }
    return total;
  };
  return rec(0);
}

// Dual Jacobi-Trudi: s_lambda = det(e_{lambda'_i - i + j}), expanded as
// integer combinations of e_nu.
std::map<Partition, long long> schur_in_e(const Partition& lambda) {
  const std::vector<int> conj = transpose(lambda).parts;
  const std::size_t l = conj.size();
  std::map<Partition, long long> out;
  std::vector<std::size_t> perm(l);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<int> idx;
    bool zero = false;
    for (std::size_t i = 0; i < l; ++i) {
      const int k = conj[i] - static_cast<int>(i) + static_cast<int>(perm[i]);
      if (k < 0) {
        zero = true;
        break;
      }
      idx.push_back(k);
    }
    if (zero) continue;
    int inversions = 0;
    for (std::size_t a = 0; a < l; ++a) {
      for (std::size_t b = a + 1; b < l; ++b) inversions += perm[a] > perm[b] ? 1 : 0;
    }
    out[Partition::from_unsorted(idx)] += (inversions % 2 == 0) ? 1 : -1;
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

BasisMatrix invert(const BasisMatrix& a) {
  const std::size_t m = a.size();
  BasisMatrix work = a;
  BasisMatrix inv(m, std::vector<RationalFunction>(m));
  for (std::size_t i = 0; i < m; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t pivot = col;
    while (pivot < m && work[pivot][col].is_zero()) ++pivot;
    if (pivot == m) throw InternalError("singular basis transition matrix");
    std::swap(work[pivot], work[col]);
    std::swap(inv[pivot], inv[col]);
    const RationalFunction p = work[col][col];
    if (!(p == RationalFunction(1))) {
      for (std::size_t j = 0; j < m; ++j) {
        if (!work[col][j].is_zero()) work[col][j] /= p;
        if (!inv[col][j].is_zero()) inv[col][j] /= p;
      }
    }
    for (std::size_t r = 0; r < m; ++r) {
      if (r == col || work[r][col].is_zero()) continue;
      const RationalFunction f = work[r][col];
      for (std::size_t j = 0; j < m; ++j) {
        if (!work[col][j].is_zero()) work[r][j] -= f * work[col][j];
        if (!inv[col][j].is_zero()) inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

struct MatrixCache {
  std::recursive_mutex mu;
  std::map<std::pair<Basis, int>, BasisMatrix> forward;
  std::map<std::pair<Basis, int>, BasisMatrix> inverse;
};

MatrixCache& cache() {
  static MatrixCache c;
  return c;
}

BasisMatrix integer_matrix(int n, const std::function<long long(const Partition&, const Partition&)>& entry) {
  const auto ps = partitions(n);
  BasisMatrix out(ps.size(), std::vector<RationalFunction>(ps.size()));
  for (std::size_t a = 0; a < ps.size(); ++a) {
    for (std::size_t b = 0; b < ps.size(); ++b) out[a][b] = RationalFunction(Rational(static_cast<long>(entry(ps[a], ps[b]))));
  }
  return out;
}

const BasisMatrix& inverse_matrix(Basis basis, int n);

// <f, g>_t for f, g given in power-sum coordinates.
RationalFunction hall_inner(const std::vector<RationalFunction>& f, const std::vector<RationalFunction>& g,
                            const std::vector<RationalFunction>& weight) {
  RationalFunction s;
  for (std::size_t a = 0; a < f.size(); ++a) {
    if (f[a].is_zero() || g[a].is_zero()) continue;
    s += f[a] * g[a] * weight[a];
  }
  return s;
}

BasisMatrix hall_littlewood_matrix(int n) {
  const auto ps = partitions(n);
  const std::size_t m = ps.size();
  const BasisMatrix& m_in_p = inverse_matrix(Basis::P, n);
  std::vector<RationalFunction> weight(m);
  for (std::size_t a = 0; a < m; ++a) {
    LaurentPoly denom(1);
    for (int part : ps[a].parts) denom *= LaurentPoly(1) - LaurentPoly::monomial(1, part);
    weight[a] = RationalFunction(LaurentPoly(Rational(static_cast<long>(zee(ps[a])))), denom);
  }
  BasisMatrix p_coords(m);
  BasisMatrix m_coords(m, std::vector<RationalFunction>(m));
  std::vector<RationalFunction> norms(m);
  // partitions(n) is reverse lexicographic, so walking it backwards visits
  // (1^n) first and respects dominance.
  for (std::size_t k = m; k-- > 0;) {
    std::vector<RationalFunction> v = m_in_p[k];
    std::vector<RationalFunction> mc(m);
    mc[k] = 1;
    for (std::size_t j = m - 1; j > k; --j) {
      const RationalFunction c = hall_inner(m_in_p[k], p_coords[j], weight) / norms[j];
      if (c.is_zero()) continue;
      for (std::size_t a = 0; a < m; ++a) {
        if (!p_coords[j][a].is_zero()) v[a] -= c * p_coords[j][a];
        if (!m_coords[j][a].is_zero()) mc[a] -= c * m_coords[j][a];
      }
    }
    norms[k] = hall_inner(v, v, weight);
    p_coords[k] = std::move(v);
    m_coords[k] = std::move(mc);
  }
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t a = 0; a < m; ++a) {
      if (m_coords[k][a].is_zero()) continue;
      if (!dominates(ps[k], ps[a])) {
        throw InternalError("Hall-Littlewood P" + ps[k].str() + " is not unitriangular in dominance order");
      }
      ratfunc_to_laurent(m_coords[k][a]);
    }
  }
  return m_coords;
}

BasisMatrix build_matrix(Basis basis, int n) {
  const auto ps = partitions(n);
  switch (basis) {
    case Basis::M:
      return integer_matrix(n, [](const Partition& a, const Partition& b) { return a == b ? 1LL : 0LL; });
    case Basis::E:
      return integer_matrix(n, [](const Partition& a, const Partition& b) { return count_matrices(a.parts, b.parts, 1); });
    case Basis::H:
      return integer_matrix(n, [n](const Partition& a, const Partition& b) { return count_matrices(a.parts, b.parts, n); });
    case Basis::P:
      return integer_matrix(n, [](const Partition& a, const Partition& b) { return count_power_sum(a.parts, b.parts); });
    case Basis::S: {
      const BasisMatrix& e = basis_matrix(Basis::E, n);
      BasisMatrix out(ps.size(), std::vector<RationalFunction>(ps.size()));
      for (std::size_t a = 0; a < ps.size(); ++a) {
        for (const auto& [nu, c] : schur_in_e(ps[a])) {
          const std::size_t row = index_of(ps, nu);
          for (std::size_t b = 0; b < ps.size(); ++b) out[a][b] += RationalFunction(Rational(static_cast<long>(c))) * e[row][b];
        }
      }
      return out;
    }
    case Basis::HLP:
      return hall_littlewood_matrix(n);
    case Basis::PT: {
      BasisMatrix out = basis_matrix(Basis::HLP, n);
      for (std::size_t a = 0; a < ps.size(); ++a) {
        const RationalFunction scale(LaurentPoly::monomial(1, -nstat(ps[a])));
        for (auto& c : out[a]) {
          if (!c.is_zero()) c = scale * c.inverted();
        }
      }
      return out;
    }
  }
  throw InvalidArgument("unknown basis");
}

const BasisMatrix& inverse_matrix(Basis basis, int n) {
  auto& c = cache();
  std::lock_guard lock(c.mu);
  auto key = std::make_pair(basis, n);
  auto it = c.inverse.find(key);
  if (it != c.inverse.end()) return it->second;
  BasisMatrix inv = invert(basis_matrix(basis, n));
  return c.inverse.emplace(key, std::move(inv)).first->second;
}

}  // namespace

const BasisMatrix& basis_matrix(Basis basis, int n) {
  check_degree(n);
  auto& c = cache();
  std::lock_guard lock(c.mu);
  auto key = std::make_pair(basis, n);
  auto it = c.forward.find(key);
  if (it != c.forward.end()) return it->second;
  BasisMatrix m = build_matrix(basis, n);
  return c.forward.emplace(key, std::move(m)).first->second;
}

SymPoly basis_element(Basis basis, const Partition& lambda, int nvars) {
  const int n = lambda.size();
  check_degree(n);
  if (nvars < n || nvars > kMaxSymDegree) {
    throw SizeGuard("basis_element: need |lambda| <= nvars <= 8, got nvars = " + std::to_string(nvars));
  }
  const auto ps = partitions(n);
  const auto& row = basis_matrix(basis, n)[index_of(ps, lambda)];
  SymPoly out{nvars, n, {}};
  for (std::size_t b = 0; b < ps.size(); ++b) {
    if (!row[b].is_zero()) out.terms.emplace(ps[b], row[b]);
  }
  return out;
}

SymPoly basis_element(Basis basis, const Partition& lambda) { return basis_element(basis, lambda, lambda.size()); }

SymFunc expand_in_basis(const SymPoly& f, Basis basis) {
  check_degree(f.degree);
  for (const auto& [lambda, c] : f.terms) {
    if (lambda.size() != f.degree || lambda.length() > f.nvars) {
      throw InvalidArgument("expand_in_basis: exponent " + lambda.str() + " inconsistent with degree/nvars");
    }
  }
  const auto ps = partitions(f.degree);
  const BasisMatrix& inv = inverse_matrix(basis, f.degree);
  SymFunc out{f.degree, basis, {}};
  for (std::size_t b = 0; b < ps.size(); ++b) {
    RationalFunction s;
    for (const auto& [lambda, c] : f.terms) {
      const auto& x = inv[index_of(ps, lambda)][b];
      if (!x.is_zero() && !c.is_zero()) s += c * x;
    }
    if (!s.is_zero()) out.coeffs.emplace(ps[b], s);
  }
  return out;
}

SymPoly to_monomial(const SymFunc& f) {
  check_degree(f.degree);
  const auto ps = partitions(f.degree);
  const BasisMatrix& mat = basis_matrix(f.basis, f.degree);
  std::vector<RationalFunction> acc(ps.size());
  for (const auto& [lambda, c] : f.coeffs) {
    if (c.is_zero()) continue;
    const auto& row = mat[index_of(ps, lambda)];
    for (std::size_t b = 0; b < ps.size(); ++b) {
      if (!row[b].is_zero()) acc[b] += c * row[b];
    }
  }
  SymPoly out{f.degree, f.degree, {}};
  for (std::size_t b = 0; b < ps.size(); ++b) {
    if (!acc[b].is_zero()) out.terms.emplace(ps[b], acc[b]);
  }
  return out;
}

SymFunc change_basis(const SymFunc& f, Basis basis) {
  if (f.basis == basis) return {f.degree, basis, prune(f.coeffs)};
  return expand_in_basis(to_monomial(f), basis);
}

bool check_symmetric(const ExponentTable& table, int nvars) {
  // Group nonzero entries by sorted exponent; a symmetric table has every
  // distinct rearrangement present with the same coefficient.
  std::map<std::vector<int>, std::pair<RationalFunction, long long>> orbits;
  for (const auto& [expo, c] : table) {
    if (static_cast<int>(expo.size()) != nvars) return false;
    if (c.is_zero()) continue;
    std::vector<int> key = expo;
    std::sort(key.begin(), key.end(), std::greater<>());
    auto [it, fresh] = orbits.try_emplace(key, c, 0);
    if (!fresh && !(it->second.first == c)) return false;
    ++it->second.second;
  }
  for (const auto& [key, entry] : orbits) {
    std::vector<int> perm = key;
    std::sort(perm.begin(), perm.end());
    long long distinct = 0;
    do {
      ++distinct;
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (distinct != entry.second) return false;
  }
  return true;
}

SymPoly orbit_form(const ExponentTable& table, int nvars, int degree) {
  if (!check_symmetric(table, nvars)) throw InvalidArgument("orbit_form: table is not symmetric");
  SymPoly out{nvars, degree, {}};
  for (const auto& [expo, c] : table) {
    if (c.is_zero()) continue;
    if (std::is_sorted(expo.begin(), expo.end(), std::greater<>())) out.terms.emplace(Partition::from_unsorted(expo), c);
  }
  return out;
}

SymFunc omega(const SymFunc& f) {
  SymFunc out{f.degree, f.basis, {}};
  switch (f.basis) {
    case Basis::P:
      for (const auto& [lambda, c] : f.coeffs) {
        out.coeffs.emplace(lambda, ((f.degree - lambda.length()) % 2 == 0) ? c : -c);
      }
      break;
    case Basis::S:
      for (const auto& [lambda, c] : f.coeffs) out.coeffs.emplace(transpose(lambda), c);
      break;
    case Basis::E:
    case Basis::H:
      out.basis = f.basis == Basis::E ? Basis::H : Basis::E;
      out.coeffs = f.coeffs;
      break;
    default:
      throw InvalidArgument("omega: unsupported basis " + basis_name(f.basis) + " (convert to P, S, E or H first)");
  }
  out.coeffs = prune(std::move(out.coeffs));
  return out;
}

SymFunc plethysm_frac(const SymFunc& f) {
  if (f.basis != Basis::P) throw InvalidArgument("plethysm_frac needs the power-sum basis");
  SymFunc out{f.degree, Basis::P, {}};
  for (const auto& [lambda, c] : f.coeffs) {
    LaurentPoly denom(1);
    for (int k : lambda.parts) denom *= LaurentPoly::monomial(1, k) - LaurentPoly(1);
    out.coeffs.emplace(lambda, c / RationalFunction(denom));
  }
  return out;
}

RationalFunction ps1(const SymPoly& f) {
  if (f.degree == 0) return f.coeff(Partition());
  return f.coeff(Partition::row(f.degree));
}

SymFunc eval_t(const SymFunc& f, const Rational& q) {
  SymFunc out{f.degree, f.basis, {}};
  for (const auto& [lambda, c] : f.coeffs) {
    Rational v = c.eval(q);
    if (v != 0) out.coeffs.emplace(lambda, RationalFunction(v));
  }
  return out;
}

SymPoly eval_t(const SymPoly& f, const Rational& q) {
  SymPoly out{f.nvars, f.degree, {}};
  for (const auto& [lambda, c] : f.terms) {
    Rational v = c.eval(q);
    if (v != 0) out.terms.emplace(lambda, RationalFunction(v));
  }
  return out;
}

SymPoly invert_t(const SymPoly& f) {
  SymPoly out{f.nvars, f.degree, {}};
  for (const auto& [lambda, c] : f.terms) out.terms.emplace(lambda, c.inverted());
  return out;
}

namespace {

Coeffs add(const Coeffs& a, const Coeffs& b, int sign) {
  Coeffs out = a;
  for (const auto& [lambda, c] : b) {
    if (sign > 0) {
      out[lambda] += c;
    } else {
      out[lambda] -= c;
    }
  }
  return prune(std::move(out));
}

}  // namespace

SymPoly operator+(const SymPoly& a, const SymPoly& b) {
  if (a.degree != b.degree) throw InvalidArgument("adding symmetric polynomials of different degree");
  return {std::max(a.nvars, b.nvars), a.degree, add(a.terms, b.terms, 1)};
}

SymPoly operator-(const SymPoly& a, const SymPoly& b) {
  if (a.degree != b.degree) throw InvalidArgument("subtracting symmetric polynomials of different degree");
  return {std::max(a.nvars, b.nvars), a.degree, add(a.terms, b.terms, -1)};
}

SymPoly operator*(const RationalFunction& c, const SymPoly& a) {
  SymPoly out{a.nvars, a.degree, {}};
  for (const auto& [lambda, x] : a.terms) out.terms.emplace(lambda, c * x);
  out.terms = prune(std::move(out.terms));
  return out;
}

SymFunc operator+(const SymFunc& a, const SymFunc& b) {
  if (a.degree != b.degree || a.basis != b.basis) throw InvalidArgument("adding symmetric functions in different spaces");
  return {a.degree, a.basis, add(a.coeffs, b.coeffs, 1)};
}

SymFunc operator*(const RationalFunction& c, const SymFunc& a) {
  SymFunc out{a.degree, a.basis, {}};
  for (const auto& [lambda, x] : a.coeffs) out.coeffs.emplace(lambda, c * x);
  out.coeffs = prune(std::move(out.coeffs));
  return out;
}

namespace {

std::string render(const Coeffs& coeffs, const std::string& letter) {
  if (coeffs.empty()) return "0";
  std::string out;
  // Largest partition first, matching partitions(n).
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    if (!out.empty()) out += " + ";
    const std::string c = it->second.str();
    const bool simple = it->second.is_laurent() && it->second.num().coeffs().size() == 1;
    if (c != "1") out += (simple ? c : "(" + c + ")") + "*";
    out += letter + it->first.str();
  }
  return out;
}

std::string letter_of(Basis b) {
  switch (b) {
    case Basis::M: return "m";
    case Basis::E: return "e";
    case Basis::H: return "h";
    case Basis::P: return "p";
    case Basis::S: return "s";
    case Basis::HLP: return "P";
    case Basis::PT: return "PT";
  }
  return "?";
}

}  // namespace

std::string str(const SymFunc& f) { return render(f.coeffs, letter_of(f.basis)); }
std::string str(const SymPoly& f) { return render(f.terms, "m"); }

}  // namespace chromgl
