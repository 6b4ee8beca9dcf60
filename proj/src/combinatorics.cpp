#include "chromgl/combinatorics.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace chromgl {

namespace {

constexpr int kMaxPartitionSize = 12;
constexpr int kMaxPathSize = 8;
constexpr int kMaxMobiusEdges = 12;
constexpr int kMaxOrientationEdges = 20;

void check_vertices(int n) {
  if (n < 0 || n > kMaxVertices) throw SizeGuard("vertex count " + std::to_string(n) + " outside [0, 11]");
}

}  // namespace

// ---------------------------------------------------------------------------
// Partitions

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) throw InvalidArgument("partition parts must be positive");
    if (i > 0 && parts[i] > parts[i - 1]) throw InvalidArgument("partition parts must be non-increasing");
  }
}

Partition Partition::from_unsorted(std::vector<int> p) {
  std::erase(p, 0);
  std::sort(p.begin(), p.end(), std::greater<>());
  return Partition(std::move(p));
}

Partition Partition::column(int k) { return Partition(std::vector<int>(static_cast<std::size_t>(k), 1)); }

Partition Partition::row(int k) { return k == 0 ? Partition() : Partition({k}); }

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::string Partition::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts[i]);
  }
  return out + ")";
}

std::vector<Partition> partitions(int n) {
  if (n < 0 || n > kMaxPartitionSize) throw SizeGuard("partitions: n = " + std::to_string(n) + " outside [0, 12]");
  std::vector<Partition> out;
  std::vector<int> cur;
  // Largest first part first gives reverse lexicographic order.
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int k = std::min(remaining, max_part); k >= 1; --k) {
      cur.push_back(k);
      rec(remaining - k, k);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

long long partition_count(int n) {
  std::vector<long long> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int m = 1; m <= n; ++m) {
    long long s = 0;
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2;
      const int g2 = k * (3 * k + 1) / 2;
      if (g1 > m) break;
      const long long sign = (k % 2 == 1) ? 1 : -1;
      s += sign * p[static_cast<std::size_t>(m - g1)];
      if (g2 <= m) s += sign * p[static_cast<std::size_t>(m - g2)];
    }
    p[static_cast<std::size_t>(m)] = s;
  }
  return p[static_cast<std::size_t>(n)];
}

Partition transpose(const Partition& lambda) {
  std::vector<int> t;
  const int first = lambda.length() ? lambda.parts.front() : 0;
  for (int i = 1; i <= first; ++i) {
    int c = 0;
    for (int p : lambda.parts) c += p >= i ? 1 : 0;
    t.push_back(c);
  }
  return Partition(std::move(t));
}

int nstat(const Partition& lambda) {
  int s = 0;
  for (int c : transpose(lambda).parts) s += c * (c - 1) / 2;
  return s;
}

long long zee(const Partition& lambda) {
  long long z = 1;
  std::size_t i = 0;
  while (i < lambda.parts.size()) {
    const int k = lambda.parts[i];
    long long m = 0;
    while (i < lambda.parts.size() && lambda.parts[i] == k) {
      ++m;
      ++i;
      z *= k * m;
    }
  }
  return z;
}

bool dominates(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) return false;
  int a = 0;
  int b = 0;
  const int len = std::max(lambda.length(), mu.length());
  for (int i = 0; i < len; ++i) {
    a += lambda[i];
    b += mu[i];
    if (a < b) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Edges and graphs

EdgeSet EdgeSet::from_pairs(const std::vector<std::pair<int, int>>& pairs) {
  EdgeSet e;
  for (auto [i, j] : pairs) e.insert(std::min(i, j), std::max(i, j));
  return e;
}

bool EdgeSet::contains(int i, int j) const {
  if (i >= j || i < 1 || j > kMaxVertices) return false;
  return (bits_ >> bit_index(i, j)) & 1U;
}

void EdgeSet::insert(int i, int j) {
  if (i >= j || i < 1 || j > kMaxVertices) {
    throw InvalidArgument("bad edge {" + std::to_string(i) + "," + std::to_string(j) + "}");
  }
  bits_ |= std::uint64_t{1} << bit_index(i, j);
}

void EdgeSet::erase(int i, int j) {
  if (contains(i, j)) bits_ &= ~(std::uint64_t{1} << bit_index(i, j));
}

std::vector<std::pair<int, int>> EdgeSet::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= kMaxVertices; ++i) {
    for (int j = i + 1; j <= kMaxVertices; ++j) {
      if (contains(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

std::string EdgeSet::str() const {
  std::string out = "{";
  bool first = true;
  for (auto [i, j] : pairs()) {
    if (!first) out += ",";
    first = false;
    out += "{" + std::to_string(i) + "," + std::to_string(j) + "}";
  }
  return out + "}";
}

bool is_indifference(EdgeSet edges, int n) {
  for (auto [i, l] : edges.pairs()) {
    if (l > n) return false;
    for (int j = i; j <= l; ++j) {
      for (int k = j + 1; k <= l; ++k) {
        if (!edges.contains(j, k)) return false;
      }
    }
  }
  return true;
}

IndiffGraph::IndiffGraph(int vertices, EdgeSet e) : n(vertices), edges(e) {
  check_vertices(n);
  if (!is_indifference(edges, n)) {
    throw InvalidArgument("edge set " + edges.str() + " is not an indifference graph on [" + std::to_string(n) + "]");
  }
}

IndiffGraph IndiffGraph::complete(int n) {
  check_vertices(n);
  EdgeSet e;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) e.insert(i, j);
  }
  return {n, e};
}

IndiffGraph IndiffGraph::path(int n) {
  check_vertices(n);
  EdgeSet e;
  for (int i = 1; i < n; ++i) e.insert(i, i + 1);
  return {n, e};
}

std::string IndiffGraph::str() const { return "([" + std::to_string(n) + "], " + edges.str() + ")"; }

IndiffGraph union_graphs(const IndiffGraph& a, const IndiffGraph& b) {
  if (a.n != b.n) throw InvalidArgument("union_graphs: vertex counts differ");
  const EdgeSet u = a.edges | b.edges;
  if (!is_indifference(u, a.n)) throw InternalError("union of indifference graphs is not interval-closed: " + u.str());
  return {a.n, u};
}

// ---------------------------------------------------------------------------
// Paths

namespace {

// Walks a step word, tracking x (east steps taken) and rows (rows descended).
// Returns false if the word leaves the region weakly above the diagonal or
// does not end at (n, -n).
bool walk(std::string_view steps, bool allow_diag, bool require_tall) {
  int x = 0;
  int rows = 0;
  for (char c : steps) {
    switch (c) {
      case 'E':
        ++x;
        break;
      case 'S':
        if (rows + 1 > x) return false;
        ++rows;
        break;
      case 'D':
        if (!allow_diag) return false;
        if (require_tall && x == rows) return false;
        ++x;
        ++rows;
        break;
      default:
        return false;
    }
  }
  return x == rows;
}

}  // namespace

bool is_schroder_word(std::string_view steps) { return walk(steps, true, false); }
bool is_tall_schroder_word(std::string_view steps) { return walk(steps, true, true); }

DyckPath::DyckPath(std::string steps) : steps_(std::move(steps)) {
  if (!walk(steps_, false, false)) throw InvalidArgument("not a Dyck path: '" + steps_ + "'");
}

DyckPath DyckPath::staircase(int n) {
  std::string s;
  for (int i = 0; i < n; ++i) s += "ES";
  return DyckPath(s);
}

SchroderPath::SchroderPath(std::string steps) : steps_(std::move(steps)) {
  if (!is_schroder_word(steps_)) throw InvalidArgument("not a Schroder path: '" + steps_ + "'");
  if (!is_tall_schroder_word(steps_)) throw InvalidArgument("Schroder path is not tall: '" + steps_ + "'");
}

int SchroderPath::size() const {
  int x = 0;
  for (char c : steps_) x += (c == 'E' || c == 'D') ? 1 : 0;
  return x;
}

std::vector<DyckPath> dyck_paths(int n) {
  if (n < 0 || n > kMaxPathSize) throw SizeGuard("dyck_paths: n = " + std::to_string(n) + " outside [0, 8]");
  std::vector<DyckPath> out;
  std::string cur;
  std::function<void(int, int)> rec = [&](int x, int rows) {
    if (x == n && rows == n) {
      out.emplace_back(cur);
      return;
    }
    if (x < n) {
      cur.push_back('E');
      rec(x + 1, rows);
      cur.pop_back();
    }
    if (rows < x) {
      cur.push_back('S');
      rec(x, rows + 1);
      cur.pop_back();
    }
  };
  rec(0, 0);
  return out;
}

std::vector<SchroderPath> tall_schroder_paths(int n) {
  if (n < 0 || n > kMaxPathSize) throw SizeGuard("tall_schroder_paths: n = " + std::to_string(n) + " outside [0, 8]");
  std::vector<SchroderPath> out;
  std::string cur;
  // 'D' < 'E' < 'S', so this branch order is lexicographic.
  std::function<void(int, int)> rec = [&](int x, int rows) {
    if (x == n && rows == n) {
      out.emplace_back(cur);
      return;
    }
    if (x < n && rows < x) {
      cur.push_back('D');
      rec(x + 1, rows + 1);
      cur.pop_back();
    }
    if (x < n) {
      cur.push_back('E');
      rec(x + 1, rows);
      cur.pop_back();
    }
    if (rows < x) {
      cur.push_back('S');
      rec(x, rows + 1);
      cur.pop_back();
    }
  };
  rec(0, 0);
  return out;
}

std::vector<IndiffGraph> indifference_graphs(int n) {
  std::vector<IndiffGraph> out;
  for (const auto& pi : dyck_paths(n)) out.push_back(graph_of(pi));
  return out;
}

namespace {

// Row i of the grid lies between y = -(i-1) and y = -i. Squares {i, j} with
// i < j <= x are completely below the path when it leaves row i at
// horizontal position x; a D step leaving from x crosses square {i, x+1}.
void area_and_diag(const std::string& steps, EdgeSet* area_out, EdgeSet* diag_out) {
  int x = 0;
  int row = 1;
  for (char c : steps) {
    if (c == 'E') {
      ++x;
      continue;
    }
    for (int j = row + 1; j <= x; ++j) area_out->insert(row, j);
    if (c == 'D') {
      diag_out->insert(row, x + 1);
      ++x;
    }
    ++row;
  }
}

}  // namespace

EdgeSet area(const SchroderPath& sigma) {
  EdgeSet a;
  EdgeSet d;
  area_and_diag(sigma.str(), &a, &d);
  return a;
}

EdgeSet diag(const SchroderPath& sigma) {
  EdgeSet a;
  EdgeSet d;
  area_and_diag(sigma.str(), &a, &d);
  return d;
}

IndiffGraph graph_of(const DyckPath& pi) { return {pi.size(), area(pi)}; }

DyckPath area_inverse(EdgeSet edges, int n) {
  check_vertices(n);
  if (!is_indifference(edges, n)) {
    throw InvalidArgument("area_inverse: " + edges.str() + " is not an indifference edge set on [" +
                          std::to_string(n) + "]");
  }
  std::string steps;
  int x = 0;
  for (int i = 1; i <= n; ++i) {
    int reach = i;
    for (int j = i + 1; j <= n; ++j) {
      if (edges.contains(i, j)) reach = j;
    }
    while (x < reach) {
      steps += 'E';
      ++x;
    }
    steps += 'S';
  }
  return DyckPath(steps);
}

SchroderPath mesa(const DyckPath& pi) {
  const std::string& s = pi.str();
  std::string out;
  int x = 0;
  int rows = 0;
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (s[k] == 'E' && k + 1 < s.size() && s[k + 1] == 'S' && x != rows) {
      out += 'D';
      ++x;
      ++rows;
      ++k;
      continue;
    }
    out += s[k];
    if (s[k] == 'E') {
      ++x;
    } else {
      ++rows;
    }
  }
  return SchroderPath(out);
}

// ---------------------------------------------------------------------------
// Subgraph poset

std::vector<IndiffGraph> indifference_subgraphs(const IndiffGraph& gamma) {
  std::vector<IndiffGraph> out;
  for (const auto& g : indifference_graphs(gamma.n)) {
    if (g.edges.is_subset_of(gamma.edges)) out.push_back(g);
  }
  return out;
}

std::map<IndiffGraph, long long> mobius_subgraph(const IndiffGraph& gamma) {
  if (gamma.edge_count() > kMaxMobiusEdges) {
    throw SizeGuard("mobius_subgraph: |E| = " + std::to_string(gamma.edge_count()) + " exceeds 12");
  }
  std::vector<IndiffGraph> elems = indifference_subgraphs(gamma);
  // A linear extension of inclusion: sort by edge count.
  std::stable_sort(elems.begin(), elems.end(),
                   [](const IndiffGraph& a, const IndiffGraph& b) { return a.edge_count() < b.edge_count(); });
  const std::size_t m = elems.size();
  // The zeta matrix Z[a][b] = [a <= b] is upper unitriangular in this order.
  // The Mobius matrix is its inverse; solve Z * x = e_top column-wise by
  // back substitution to get mu(., top).
  std::vector<std::vector<int>> zeta(m, std::vector<int>(m, 0));
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) zeta[a][b] = elems[a].edges.is_subset_of(elems[b].edges) ? 1 : 0;
  }
  std::vector<long long> mu(m, 0);
  for (std::size_t a = m; a-- > 0;) {
    long long rhs = (elems[a] == gamma) ? 1 : 0;
    for (std::size_t b = a + 1; b < m; ++b) rhs -= zeta[a][b] * mu[b];
    mu[a] = rhs;
  }
  std::map<IndiffGraph, long long> out;
  for (std::size_t a = 0; a < m; ++a) out.emplace(elems[a], mu[a]);
  return out;
}

// ---------------------------------------------------------------------------
// Orientations

std::vector<std::pair<int, int>> Orientation::arcs() const {
  std::vector<std::pair<int, int>> out;
  for (auto [i, j] : base.edges.pairs()) {
    if (ascending.contains(i, j)) {
      out.emplace_back(i, j);
    } else {
      out.emplace_back(j, i);
    }
  }
  return out;
}

std::vector<Orientation> orientations(const IndiffGraph& gamma) {
  const int m = gamma.edge_count();
  if (m > kMaxOrientationEdges) throw SizeGuard("orientations: |E| = " + std::to_string(m) + " exceeds 20");
  const auto edges = gamma.edges.pairs();
  std::vector<Orientation> out;
  out.reserve(std::size_t{1} << m);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    EdgeSet asc;
    for (int k = 0; k < m; ++k) {
      if ((mask >> k) & 1U) asc.insert(edges[static_cast<std::size_t>(k)].first, edges[static_cast<std::size_t>(k)].second);
    }
    out.push_back({gamma, asc});
  }
  return out;
}

Orientation orientation_from_arcs(const IndiffGraph& gamma, const std::vector<std::pair<int, int>>& arcs) {
  EdgeSet seen;
  EdgeSet asc;
  for (auto [a, b] : arcs) {
    const int i = std::min(a, b);
    const int j = std::max(a, b);
    if (!gamma.edges.contains(i, j) || seen.contains(i, j)) {
      throw InvalidArgument("orientation arc (" + std::to_string(a) + "," + std::to_string(b) +
                            ") is not a fresh edge of " + gamma.str());
    }
    seen.insert(i, j);
    if (a < b) asc.insert(i, j);
  }
  if (seen != gamma.edges) throw InvalidArgument("orientation does not cover every edge of " + gamma.str());
  return {gamma, asc};
}

namespace {

std::vector<int> all_hrv(const Orientation& theta) {
  const int n = theta.base.n;
  std::vector<int> h(static_cast<std::size_t>(n) + 1, 0);
  for (int i = n; i >= 1; --i) {
    int best = i;
    for (int j = i + 1; j <= n; ++j) {
      if (theta.ascending.contains(i, j) && theta.base.edges.contains(i, j)) best = std::max(best, h[static_cast<std::size_t>(j)]);
    }
    h[static_cast<std::size_t>(i)] = best;
  }
  return h;
}

}  // namespace

int hrv(const Orientation& theta, int i) {
  if (i < 1 || i > theta.base.n) throw InvalidArgument("hrv: vertex out of range");
  return all_hrv(theta)[static_cast<std::size_t>(i)];
}

Partition type_of(const Orientation& theta) {
  const auto h = all_hrv(theta);
  std::vector<int> fibers(h.size(), 0);
  for (int i = 1; i <= theta.base.n; ++i) ++fibers[static_cast<std::size_t>(h[static_cast<std::size_t>(i)])];
  return Partition::from_unsorted(fibers);
}

}  // namespace chromgl
