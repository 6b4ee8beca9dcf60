#include <functional>

#include "chromgl/symfunc.hpp"
#include "doctest.h"

using namespace chromgl;

namespace {

// Number of semistandard tableaux of shape lambda and content mu, built by
// adding horizontal strips of sizes mu_1, mu_2, ...
long kostka(const Partition& lambda, const Partition& mu) {
  std::function<long(std::vector<int>, std::size_t)> rec = [&](std::vector<int> shape, std::size_t k) -> long {
    if (k == mu.parts.size()) return Partition::from_unsorted(shape) == lambda ? 1 : 0;
    long total = 0;
    // distribute mu_k boxes over rows, at most lambda_r - shape_r each and
    // never past the previous row's old length (horizontal strip).
    std::function<void(std::size_t, int, std::vector<int>&)> place = [&](std::size_t r, int left, std::vector<int>& s) {
      if (r == s.size()) {
        if (left == 0) total += rec(s, k + 1);
        return;
      }
      const int cap_shape = lambda[static_cast<int>(r)] - shape[r];
      const int cap_strip = r == 0 ? left : shape[r - 1] - shape[r];
      for (int add = 0; add <= std::min({left, cap_shape, cap_strip}); ++add) {
        s[r] += add;
        place(r + 1, left - add, s);
        s[r] -= add;
      }
    };
    std::vector<int> s = shape;
    place(0, mu.parts[k], s);
    return total;
  };
  return rec(std::vector<int>(static_cast<std::size_t>(lambda.length()), 0), 0);
}

RationalFunction rf(const std::string& s) { return RationalFunction(LaurentPoly::parse(s)); }

}  // namespace

TEST_CASE("schur functions match Kostka numbers") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& lambda : partitions(n)) {
      const SymPoly s = basis_element(Basis::S, lambda);
      for (const auto& mu : partitions(n)) CHECK(s.coeff(mu) == RationalFunction(Rational(kostka(lambda, mu))));
    }
  }
}

TEST_CASE("hall-littlewood P and its modified form") {
  const SymPoly p2 = basis_element(Basis::HLP, Partition({2}));
  CHECK(p2.coeff(Partition({2})) == rf("1"));
  CHECK(p2.coeff(Partition({1, 1})) == rf("1 - t"));
  CHECK(basis_element(Basis::HLP, Partition({2, 1})).coeff(Partition::column(3)) == rf("2 - t - t^2"));
  CHECK(basis_element(Basis::PT, Partition::column(3)).coeff(Partition::column(3)) == rf("t^-3"));
  for (int n = 1; n <= 5; ++n) {
    for (const auto& lambda : partitions(n)) {
      // P_lambda(x; 0) = s_lambda and P_lambda(x; 1) = m_lambda
      const SymPoly p = basis_element(Basis::HLP, lambda);
      CHECK(eval_t(p, Rational(0)) == basis_element(Basis::S, lambda));
      CHECK(eval_t(p, Rational(1)) == basis_element(Basis::M, lambda));
    }
  }
}

TEST_CASE("basis changes round trip") {
  const Partition lambda({3, 1, 1});
  for (Basis from : {Basis::M, Basis::E, Basis::H, Basis::P, Basis::S, Basis::HLP, Basis::PT}) {
    const SymFunc f{5, from, {{lambda, rf("t + 2")}, {Partition({2, 2, 1}), rf("-1")}}};
    for (Basis to : {Basis::M, Basis::E, Basis::H, Basis::P, Basis::S, Basis::HLP, Basis::PT}) {
      CHECK(change_basis(change_basis(f, to), from) == f);
    }
  }
  // e_2 = m_11, h_2 = m_2 + m_11, p_2 = m_2
  CHECK(basis_element(Basis::E, Partition({2})) == SymPoly{2, 2, {{Partition({1, 1}), rf("1")}}});
  CHECK(basis_element(Basis::P, Partition({2})) == SymPoly{2, 2, {{Partition({2}), rf("1")}}});
  CHECK(basis_element(Basis::H, Partition({2})).coeff(Partition({1, 1})) == rf("1"));
}

TEST_CASE("omega") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& lambda : partitions(n)) {
      const SymFunc e{n, Basis::E, {{lambda, rf("1")}}};
      const SymFunc h{n, Basis::H, {{lambda, rf("1")}}};
      CHECK(to_monomial(omega(e)) == to_monomial(h));
      const SymFunc s{n, Basis::S, {{lambda, rf("1")}}};
      CHECK(omega(omega(s)) == s);
      const SymFunc via_p = change_basis(omega(change_basis(s, Basis::P)), Basis::S);
      CHECK(via_p == omega(s));
    }
  }
  CHECK_THROWS_AS(omega(SymFunc{2, Basis::M, {}}), InvalidArgument);
}

TEST_CASE("plethysm by 1/(t-1) and ps1") {
  const SymFunc p1{1, Basis::P, {{Partition({1}), rf("1")}}};
  const SymFunc out = plethysm_frac(p1);
  CHECK(out.coeff(Partition({1})) == RationalFunction(LaurentPoly(1), LaurentPoly::parse("t - 1")));
  CHECK_THROWS_AS(plethysm_frac(SymFunc{1, Basis::M, {}}), InvalidArgument);
  // h_n(1, 0, 0, ...) = 1, e_n(1, 0, ...) = 0 for n >= 2
  CHECK(ps1(basis_element(Basis::H, Partition({3}))) == rf("1"));
  CHECK(ps1(basis_element(Basis::E, Partition({3}))).is_zero());
}

TEST_CASE("symmetry checker") {
  ExponentTable sym{{{1, 0}, rf("t")}, {{0, 1}, rf("t")}};
  CHECK(check_symmetric(sym, 2));
  CHECK(orbit_form(sym, 2, 1) == SymPoly{2, 1, {{Partition({1}), rf("t")}}});
  ExponentTable lopsided{{{1, 0}, rf("t")}};
  CHECK_FALSE(check_symmetric(lopsided, 2));
  ExponentTable unequal{{{1, 0}, rf("t")}, {{0, 1}, rf("1")}};
  CHECK_FALSE(check_symmetric(unequal, 2));
  CHECK_THROWS_AS(orbit_form(unequal, 2, 1), InvalidArgument);
}

TEST_CASE("guards") {
  CHECK_THROWS_AS(basis_element(Basis::S, Partition({9})), SizeGuard);
  CHECK_THROWS_AS(basis_element(Basis::S, Partition({2}), 1), SizeGuard);
  CHECK_THROWS_AS(parse_basis("Q"), InvalidArgument);
  CHECK(str(SymFunc{2, Basis::S, {}}) == "0");
}
