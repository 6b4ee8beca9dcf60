#include "chromgl/fqoracle.hpp"
#include "doctest.h"

using namespace chromgl;

namespace {

Rational pw(int b, int e) { return rational_pow(Rational(b), e); }

IndiffGraph edge(int n, int i, int j) { return IndiffGraph(n, EdgeSet::from_pairs({{i, j}})); }

}  // namespace

TEST_CASE("matrices and Jordan forms") {
  CHECK(jordan(Partition::column(3), 2) == Matrix::identity(3, 2));
  const Matrix j3 = jordan(Partition({3}), 5);
  CHECK(j3.str() == "110011001");
  const Matrix nil = jordan(Partition({2}), 2) - Matrix::identity(2, 2);
  CHECK(nil * nil == Matrix(2, 2));
  Matrix inv;
  CHECK(invert(j3, inv));
  CHECK(j3 * inv == Matrix::identity(3, 5));
  CHECK_FALSE(invert(Matrix::parse("1122", 3), inv));
  CHECK(Matrix::parse("1101", 2) == jordan(Partition({2}), 2));
  CHECK_THROWS_AS(Matrix::parse("123", 2), InvalidArgument);
  CHECK_THROWS_AS(Matrix(2, 4), InvalidArgument);
}

TEST_CASE("superclass labels") {
  CHECK(superclass_label(Matrix::identity(4, 3)) == IndiffGraph::complete(4));
  CHECK(superclass_label(jordan(Partition({4}), 3)) == IndiffGraph::edgeless(4));
  Matrix u = Matrix::identity(3, 2);
  u.set(0, 2, 1);
  CHECK(superclass_label(u) == IndiffGraph::path(3));
  CHECK_THROWS_AS(superclass_label(Matrix::parse("0110", 2)), InvalidArgument);
}

TEST_CASE("superclass sizes") {
  for (int q : {2, 3}) {
    for (int n = 1; n <= 4; ++n) {
      const auto& sizes = superclass_sizes(n, q);
      BigInt total = 0;
      for (const auto& [g, s] : sizes) total += s;
      CHECK(total == ut_order(n, q));
      // |UT_gamma| = sum over sigma containing gamma of |UT_sigma°|
      for (const auto& [g, s] : sizes) {
        BigInt sub = 0;
        for (const auto& [h, t] : sizes) {
          if (g.edges.is_subset_of(h.edges)) sub += t;
        }
        CHECK(Rational(sub) == pw(q, n * (n - 1) / 2 - g.edge_count()));
      }
      const Rational generic = pw(q - 1, n - 1) * Rational(ut_order(n, q)) / pw(q, n - 1);
      CHECK(Rational(sizes.at(IndiffGraph::edgeless(n))) == generic);
    }
  }
}

TEST_CASE("permutation characters and supercharacters") {
  for (int q : {2, 3}) {
    for (int n = 1; n <= 3; ++n) {
      for (const auto& g : indifference_graphs(n)) {
        CHECK(chi_bar(g, q) == chi_bar_coset_oracle(g, q));
        CHECK(chi_bar(g, q).at(IndiffGraph::complete(n)) == pw(q, g.edge_count()));
      }
    }
    for (const auto& g : indifference_graphs(4)) {
      ClassFnUT sum = zero_class_fn(4, q);
      for (const auto& s : indifference_graphs(4)) {
        if (s.edges.is_subset_of(g.edges)) sum = sum + chi_super(s, q);
      }
      CHECK(sum == chi_bar(g, q));
    }
    for (const auto& g : indifference_graphs(3)) {
      for (const auto& s : indifference_graphs(3)) {
        const Rational ip = inner_product_UT(chi_super(g, q), chi_super(s, q));
        if (g == s) {
          CHECK(ip > 0);
        } else {
          CHECK(ip == 0);
        }
        const Rational dd = inner_product_UT(delta(g, q), delta(s, q));
        if (g != s) CHECK(dd == 0);
      }
    }
  }
  for (const auto& [g, v] : delta_bar(IndiffGraph::edgeless(3), 2).values) CHECK(v == 1);
}

TEST_CASE("pseudosupercharacters") {
  const int q = 3;
  const SchroderPath sigma("EDESS");
  CHECK(psi_pseudo(sigma, q) == chi_bar(IndiffGraph::path(3), q) - chi_bar(edge(3, 2, 3), q));
  CHECK(psi_pseudo(sigma, q) == chi_super(edge(3, 1, 2), q) + chi_super(IndiffGraph::path(3), q));
  for (const auto& pi : dyck_paths(3)) CHECK(psi_pseudo(SchroderPath(pi.str()), q) == chi_bar(graph_of(pi), q));
  for (int n = 1; n <= 4; ++n) {
    for (const auto& pi : dyck_paths(n)) CHECK(psi_mesa_check(pi, 2));
  }
  CHECK_THROWS_AS(psi_pseudo(SchroderPath("EEEEESSSSS"), 2), SizeGuard);
}

TEST_CASE("induction to GL_n") {
  // Ind_UT^GL(1)(J_(2)) over F_2: x^{-1} J x is upper triangular exactly for
  // x in the Borel subgroup (2 elements), and |UT_2| = 2.
  const UnipClassFn triv = induce_to_GL(chi_bar(IndiffGraph::edgeless(2), 2), true);
  CHECK(triv.at(Partition({2})) == 1);
  CHECK(triv.at(Partition({1, 1})) == Rational(gl_order(2, 2)) / Rational(ut_order(2, 2)));
  for (int q : {2, 3}) {
    for (int n = 1; n <= 3; ++n) {
      for (const auto& g : indifference_graphs(n)) {
        const UnipClassFn ind = induce_to_GL(chi_bar(g, q), true);
        CHECK(ind == induce_trivial_from_pattern(g, q));
        CHECK(ind.at(Partition::column(n)) == Rational(gl_order(n, q)) / Rational(ut_order(n, q)) * pw(q, g.edge_count()));
        for (const auto& lambda : partitions(n)) {
          const Matrix a = jordan(lambda, q) - Matrix::identity(n, q);
          CHECK(ind.at(lambda) == pw(q - 1, n) * pw(q, g.edge_count()) * Rational(hessenberg_count(g, a)));
        }
      }
    }
  }
  // linearity
  const auto a = chi_bar(IndiffGraph::path(3), 2);
  const auto b = chi_super(edge(3, 1, 2), 2);
  CHECK(induce_to_GL(Rational(2, 3) * a + b) == Rational(2, 3) * induce_to_GL(a) + induce_to_GL(b));
  CHECK_THROWS_AS(zero_class_fn(5, 2), SizeGuard);
}

TEST_CASE("group guards") {
  CHECK_THROWS_AS(induce_to_GL(chi_bar(IndiffGraph::edgeless(4), 3)), SizeGuard);
  CHECK_THROWS_AS(chi_bar(IndiffGraph::edgeless(2), 4), InvalidArgument);
}

TEST_CASE("flags and Hessenberg counts") {
  for (int q : {2, 3}) {
    for (int n = 1; n <= 4; ++n) CHECK(BigInt(static_cast<long>(flags(n, q).size())) == q_factorial(n, q));
  }
  CHECK(hessenberg_count(IndiffGraph::edgeless(2), Matrix(2, 2)) == 3);
  CHECK_THROWS_AS(hessenberg_count(IndiffGraph::edgeless(2), Matrix(3, 2)), InvalidArgument);
}

TEST_CASE("regular unipotent class size") {
  for (int q : {2, 3}) {
    for (int n = 1; n <= 3; ++n) {
      CHECK(Rational(centralizer_order(jordan(Partition({n}), q))) == pw(q, n - 1) * (q - 1));
    }
  }
}
