/**
 * @file combinatorics.hpp
 * @brief Partitions, Dyck and tall Schroder paths, indifference graphs and
 * the maps between them; the subgraph Mobius function; orientations.
 *
 * Vertices are 1-based. An edge {i, j} with i < j is stored as one bit of a
 * 64-bit mask at position (j-1)(j-2)/2 + (i-1), so edge sets on [n] for
 * n <= kMaxVertices fit in one word and the layout does not depend on n.
 */
#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chromgl/error.hpp"

namespace chromgl {

// ---------------------------------------------------------------------------
// Partitions

struct Partition {
  std::vector<int> parts;  ///< non-increasing, strictly positive

  Partition() = default;
  /// Validates the parts; throws InvalidArgument.
  explicit Partition(std::vector<int> p);
  /// Sorts into non-increasing order and drops zeros.
  static Partition from_unsorted(std::vector<int> p);
  /// (1^k)
  static Partition column(int k);
  /// (k), or () for k = 0.
  static Partition row(int k);

  int size() const;
  int length() const { return static_cast<int>(parts.size()); }
  int operator[](int i) const { return i < length() ? parts[static_cast<std::size_t>(i)] : 0; }
  /// "(3,1)"; "()" for the empty partition.
  std::string str() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;
};

/// All partitions of n in reverse lexicographic order: (n), ..., (1^n).
std::vector<Partition> partitions(int n);
/// The number of partitions of n, by the pentagonal recurrence.
long long partition_count(int n);
Partition transpose(const Partition& lambda);
/// n(lambda) = sum_i C(lambda'_i, 2)
int nstat(const Partition& lambda);
/// z_lambda = prod_k k^{m_k} m_k!
long long zee(const Partition& lambda);
/// Dominance order: lambda >= mu.
bool dominates(const Partition& lambda, const Partition& mu);

// ---------------------------------------------------------------------------
// Edges

inline constexpr int kMaxVertices = 11;

class EdgeSet {
 public:
  constexpr EdgeSet() = default;
  constexpr explicit EdgeSet(std::uint64_t bits) : bits_(bits) {}
  static EdgeSet from_pairs(const std::vector<std::pair<int, int>>& pairs);

  static constexpr int bit_index(int i, int j) { return (j - 1) * (j - 2) / 2 + (i - 1); }

  bool contains(int i, int j) const;
  void insert(int i, int j);
  void erase(int i, int j);
  int size() const { return __builtin_popcountll(bits_); }
  bool empty() const { return bits_ == 0; }
  std::uint64_t bits() const { return bits_; }
  bool is_subset_of(EdgeSet o) const { return (bits_ & ~o.bits_) == 0; }
  /// Sorted pairs (i, j), i < j, ordered by i then j.
  std::vector<std::pair<int, int>> pairs() const;
  /// "{{1,2},{2,3}}"
  std::string str() const;

  friend EdgeSet operator|(EdgeSet a, EdgeSet b) { return EdgeSet(a.bits_ | b.bits_); }
  friend EdgeSet operator&(EdgeSet a, EdgeSet b) { return EdgeSet(a.bits_ & b.bits_); }
  friend EdgeSet operator-(EdgeSet a, EdgeSet b) { return EdgeSet(a.bits_ & ~b.bits_); }
  friend auto operator<=>(EdgeSet, EdgeSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// The interval-closure condition on [n].
bool is_indifference(EdgeSet edges, int n);

struct IndiffGraph {
  int n = 0;
  EdgeSet edges;

  IndiffGraph() = default;
  /// Validates interval closure; throws InvalidArgument.
  IndiffGraph(int vertices, EdgeSet e);
  static IndiffGraph edgeless(int n) { return {n, EdgeSet()}; }
  /// All pairs {i, j}: the graph of the identity superclass.
  static IndiffGraph complete(int n);
  /// The path 1-2-...-n.
  static IndiffGraph path(int n);

  int edge_count() const { return edges.size(); }
  std::string str() const;
  friend auto operator<=>(const IndiffGraph&, const IndiffGraph&) = default;
};

IndiffGraph union_graphs(const IndiffGraph& a, const IndiffGraph& b);

// ---------------------------------------------------------------------------
// Lattice paths

/// E/S path from (0,0) to (n,-n) weakly above the diagonal.
class DyckPath {
 public:
  DyckPath() = default;
  /// Validates; throws InvalidArgument.
  explicit DyckPath(std::string steps);
  static DyckPath staircase(int n);

  int size() const { return static_cast<int>(steps_.size()) / 2; }
  const std::string& str() const { return steps_; }
  friend auto operator<=>(const DyckPath&, const DyckPath&) = default;

 private:
  std::string steps_;
};

/// E/S/D path from (0,0) to (n,-n) weakly above the diagonal with no D step
/// starting on the diagonal. Only tall paths are representable.
class SchroderPath {
 public:
  SchroderPath() = default;
  /// Validates tallness; throws InvalidArgument.
  explicit SchroderPath(std::string steps);
  SchroderPath(const DyckPath& pi) : steps_(pi.str()) {}  // NOLINT(google-explicit-constructor)

  int size() const;
  bool is_dyck() const { return steps_.find('D') == std::string::npos; }
  const std::string& str() const { return steps_; }
  friend auto operator<=>(const SchroderPath&, const SchroderPath&) = default;

 private:
  std::string steps_;
};

/// True when `steps` is a valid (not necessarily tall) Schroder path.
bool is_schroder_word(std::string_view steps);
/// True when `steps` is a valid tall Schroder path.
bool is_tall_schroder_word(std::string_view steps);

/// Exhaustive lists in lexicographic order of step strings.
std::vector<DyckPath> dyck_paths(int n);
std::vector<SchroderPath> tall_schroder_paths(int n);
/// IG_n, listed through graph_of over dyck_paths(n).
std::vector<IndiffGraph> indifference_graphs(int n);

EdgeSet area(const SchroderPath& sigma);
EdgeSet diag(const SchroderPath& sigma);
inline EdgeSet area(const DyckPath& pi) { return area(SchroderPath(pi)); }

IndiffGraph graph_of(const DyckPath& pi);
/// The unique Dyck path whose area is `edges`; throws InvalidArgument if
/// the edge set is not interval-closed.
DyckPath area_inverse(EdgeSet edges, int n);
/// Replace each tall peak ES by a diagonal step.
SchroderPath mesa(const DyckPath& pi);

// ---------------------------------------------------------------------------
// Subgraph poset

/// mu(sigma, gamma) for every indifference graph sigma with E(sigma) in
/// E(gamma). Throws SizeGuard for |E(gamma)| > 12.
std::map<IndiffGraph, long long> mobius_subgraph(const IndiffGraph& gamma);

/// Indifference graphs sigma on [n] with E(sigma) contained in E(gamma).
std::vector<IndiffGraph> indifference_subgraphs(const IndiffGraph& gamma);

// ---------------------------------------------------------------------------
// Orientations

/// An orientation of `base`: bit k of `ascending` set means the edge with
/// bit index k is directed from its smaller to its larger endpoint.
struct Orientation {
  IndiffGraph base;
  EdgeSet ascending;

  bool is_ascending(int i, int j) const { return ascending.contains(std::min(i, j), std::max(i, j)); }
  /// Directed pairs, sorted by the underlying edge.
  std::vector<std::pair<int, int>> arcs() const;
};

/// All 2^|E| orientations. Throws SizeGuard for |E| > 20.
std::vector<Orientation> orientations(const IndiffGraph& gamma);
/// Builds an orientation from directed pairs; throws InvalidArgument when
/// the pairs do not cover E(gamma) exactly.
Orientation orientation_from_arcs(const IndiffGraph& gamma, const std::vector<std::pair<int, int>>& arcs);
/// Highest vertex reachable from i along an increasing directed path.
int hrv(const Orientation& theta, int i);
Partition type_of(const Orientation& theta);

}  // namespace chromgl
