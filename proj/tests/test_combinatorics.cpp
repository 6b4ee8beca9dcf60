#include <set>

#include "chromgl/combinatorics.hpp"
#include "doctest.h"

using namespace chromgl;

namespace {

// C_{n+1} = sum C_i C_{n-i}
long catalan(int n) {
  std::vector<long> c{1};
  for (int m = 1; m <= n; ++m) {
    long s = 0;
    for (int i = 0; i < m; ++i) s += c[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(m - 1 - i)];
    c.push_back(s);
  }
  return c[static_cast<std::size_t>(n)];
}

// Small Schroder numbers: (m+1) s_m = 3(2m-1) s_{m-1} - (m-2) s_{m-2}, s_0 = s_1 = 1.
long small_schroder(int n) {
  std::vector<long> s{1, 1};
  for (int m = 2; m <= n; ++m) {
    s.push_back((3 * (2 * m - 1) * s[static_cast<std::size_t>(m - 1)] - (m - 2) * s[static_cast<std::size_t>(m - 2)]) / (m + 1));
  }
  return s[static_cast<std::size_t>(n)];
}

EdgeSet edges(std::initializer_list<std::pair<int, int>> p) { return EdgeSet::from_pairs(p); }

}  // namespace

TEST_CASE("partitions") {
  for (int n = 0; n <= 12; ++n) CHECK(static_cast<long long>(partitions(n).size()) == partition_count(n));
  const auto p4 = partitions(4);
  CHECK(p4.front() == Partition({4}));
  CHECK(p4.back() == Partition::column(4));
  CHECK(transpose(Partition({3, 1})) == Partition({2, 1, 1}));
  CHECK(nstat(Partition({2, 1})) == 1);
  CHECK(zee(Partition({2, 1, 1})) == 4);
  CHECK(dominates(Partition({3, 1}), Partition({2, 2})));
  CHECK_FALSE(dominates(Partition({2, 2}), Partition({3, 1})));
  CHECK_THROWS_AS(Partition({1, 2}), InvalidArgument);
  CHECK_THROWS_AS(partitions(13), SizeGuard);
}

TEST_CASE("path counts follow the Catalan and small Schroder recurrences") {
  const std::vector<long> catalan_expected{1, 1, 2, 5, 14, 42};
  const std::vector<long> schroder_expected{1, 1, 3, 11, 45};
  for (int n = 0; n <= 5; ++n) {
    CHECK(static_cast<long>(dyck_paths(n).size()) == catalan(n));
    CHECK(catalan(n) == catalan_expected[static_cast<std::size_t>(n)]);
    CHECK(static_cast<long>(indifference_graphs(n).size()) == catalan(n));
  }
  for (int n = 0; n <= 4; ++n) CHECK(static_cast<long>(tall_schroder_paths(n).size()) == schroder_expected[static_cast<std::size_t>(n)]);
  for (int n = 0; n <= 7; ++n) CHECK(static_cast<long>(tall_schroder_paths(n).size()) == small_schroder(n));
}

TEST_CASE("area and diag of the worked examples") {
  CHECK(area(DyckPath("EESESS")) == edges({{1, 2}, {2, 3}}));
  CHECK(area(SchroderPath("EEDSS")) == edges({{1, 2}, {2, 3}}));
  CHECK(diag(SchroderPath("EEDSS")) == edges({{1, 3}}));
  CHECK(area(SchroderPath("EDESS")) == edges({{2, 3}}));
  CHECK(diag(SchroderPath("EDESS")) == edges({{1, 2}}));
  CHECK(mesa(DyckPath("EESESSES")).str() == "EDDSES");
  CHECK_THROWS_AS(SchroderPath("DS"), InvalidArgument);
  CHECK_THROWS_AS(DyckPath("SE"), InvalidArgument);
}

TEST_CASE("graph and area bijections round trip") {
  for (int n = 0; n <= 6; ++n) {
    std::set<IndiffGraph> seen;
    for (const auto& pi : dyck_paths(n)) {
      const IndiffGraph g = graph_of(pi);
      CHECK(is_indifference(g.edges, n));
      CHECK(area_inverse(g.edges, n) == pi);
      seen.insert(g);
    }
    CHECK(seen.size() == dyck_paths(n).size());
  }
  CHECK_THROWS_AS(area_inverse(edges({{1, 3}}), 3), InvalidArgument);
}

TEST_CASE("every Area u S is an indifference edge set") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& sigma : tall_schroder_paths(n)) {
      const auto d = diag(sigma).pairs();
      for (unsigned mask = 0; mask < (1U << d.size()); ++mask) {
        EdgeSet e = area(sigma);
        for (std::size_t k = 0; k < d.size(); ++k) {
          if (mask >> k & 1U) e.insert(d[k].first, d[k].second);
        }
        CHECK(is_indifference(e, n));
      }
    }
  }
}

TEST_CASE("mobius function inverts the zeta matrix of the subgraph poset") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& gamma : indifference_graphs(n)) {
      const auto mu = mobius_subgraph(gamma);
      // sum_{sigma <= tau <= gamma} mu(tau, gamma) = [sigma == gamma]
      for (const auto& sigma : indifference_subgraphs(gamma)) {
        long long s = 0;
        for (const auto& [tau, m] : mu) {
          if (sigma.edges.is_subset_of(tau.edges)) s += m;
        }
        CHECK(s == (sigma == gamma ? 1 : 0));
      }
    }
  }
}

TEST_CASE("orientations, hrv and type") {
  const IndiffGraph gamma(4, edges({{1, 2}, {1, 3}, {2, 3}, {3, 4}}));
  const Orientation theta = orientation_from_arcs(gamma, {{2, 1}, {1, 3}, {3, 2}, {3, 4}});
  CHECK(hrv(theta, 1) == 4);
  CHECK(hrv(theta, 2) == 2);
  CHECK(hrv(theta, 3) == 4);
  CHECK(hrv(theta, 4) == 4);
  CHECK(type_of(theta) == Partition({3, 1}));
  CHECK(orientations(gamma).size() == 16);
  CHECK_THROWS_AS(orientation_from_arcs(gamma, {{1, 2}}), InvalidArgument);
  CHECK(type_of(orientations(IndiffGraph::edgeless(3)).front()) == Partition::column(3));
}

TEST_CASE("edge sets") {
  EdgeSet e;
  e.insert(2, 5);
  e.insert(1, 2);
  CHECK(e.str() == "{{1,2},{2,5}}");
  CHECK(e.size() == 2);
  e.erase(2, 5);
  CHECK(e == edges({{1, 2}}));
  CHECK(union_graphs(IndiffGraph::path(3), IndiffGraph::edgeless(3)) == IndiffGraph::path(3));
  CHECK_THROWS_AS(IndiffGraph(3, edges({{1, 3}})), InvalidArgument);
}
