/**
 * @file symfunc.hpp
 * @brief Homogeneous symmetric functions of degree n, represented faithfully
 * in n variables, with coefficients in Q(t).
 *
 * The monomial basis is the hub: every basis element is expanded into
 * monomial orbit sums, and every change of basis goes through that
 * coordinate system. Transition matrices are memoized per (basis, degree).
 *
 * Hall-Littlewood P_lambda(x; t) is obtained by Gram-Schmidt on the monomial
 * basis, taken in increasing lexicographic order (a linear extension of
 * dominance), against
 *
 *     <p_lambda, p_mu>_t = delta_{lambda,mu} z_lambda prod_i 1/(1 - t^{lambda_i}).
 *
 * The modified form is PT_lambda(x; t) = t^{-n(lambda)} P_lambda(x; 1/t).
 */
#pragma once

#include <map>
#include <string>
#include <vector>

#include "chromgl/combinatorics.hpp"
#include "chromgl/exactnum.hpp"

namespace chromgl {

enum class Basis { M, E, H, P, S, HLP, PT };

std::string basis_name(Basis b);
/// Inverse of basis_name; throws InvalidArgument.
Basis parse_basis(const std::string& name);

inline constexpr int kMaxSymDegree = 8;

using Coeffs = std::map<Partition, RationalFunction>;

/// A symmetric polynomial in `nvars` variables, homogeneous of `degree`,
/// stored as monomial orbit-sum coefficients: terms[lambda] is the
/// coefficient of every monomial whose sorted exponent vector is lambda.
struct SymPoly {
  int nvars = 0;
  int degree = 0;
  Coeffs terms;

  RationalFunction coeff(const Partition& lambda) const;
  friend bool operator==(const SymPoly&, const SymPoly&) = default;
};

/// Coefficients of a degree-n symmetric function in a named basis.
struct SymFunc {
  int degree = 0;
  Basis basis = Basis::M;
  Coeffs coeffs;

  RationalFunction coeff(const Partition& lambda) const;
  friend bool operator==(const SymFunc&, const SymFunc&) = default;
};

/// Drops zero entries so that equality is structural.
Coeffs prune(Coeffs c);

/// Full multidegree table: exponent vector (length nvars) -> coefficient.
using ExponentTable = std::map<std::vector<int>, RationalFunction>;

/// Expansion of a basis element into orbit-sum form with nvars = |lambda|
/// (or the given nvars). Throws SizeGuard beyond degree 8.
SymPoly basis_element(Basis basis, const Partition& lambda, int nvars);
SymPoly basis_element(Basis basis, const Partition& lambda);

/// Coefficients c with sum_lambda c_lambda * basis_element(basis, lambda) = f.
SymFunc expand_in_basis(const SymPoly& f, Basis basis);
SymPoly to_monomial(const SymFunc& f);
SymFunc change_basis(const SymFunc& f, Basis basis);

/// True iff the table's coefficients are constant on S_n-orbits of exponent
/// vectors (absent entries count as zero).
bool check_symmetric(const ExponentTable& table, int nvars);
/// Collapses a symmetric table to orbit-sum form; throws InvalidArgument if
/// the table is not symmetric.
SymPoly orbit_form(const ExponentTable& table, int nvars, int degree);

/// Supported for P, S, E and H bases.
SymFunc omega(const SymFunc& f);
/// p_k -> p_k / (t^k - 1), on a power-sum expansion.
SymFunc plethysm_frac(const SymFunc& f);
/// Evaluation at x = (1, 0, 0, ...).
RationalFunction ps1(const SymPoly& f);
/// Specialize t = q in every coefficient; throws DivisionByZero on a pole.
SymFunc eval_t(const SymFunc& f, const Rational& q);
SymPoly eval_t(const SymPoly& f, const Rational& q);
/// t -> 1/t in every coefficient.
SymPoly invert_t(const SymPoly& f);

SymPoly operator+(const SymPoly& a, const SymPoly& b);
SymPoly operator-(const SymPoly& a, const SymPoly& b);
SymPoly operator*(const RationalFunction& c, const SymPoly& a);
SymFunc operator+(const SymFunc& a, const SymFunc& b);
SymFunc operator*(const RationalFunction& c, const SymFunc& a);

/// Row lambda holds the monomial coefficients of basis element lambda;
/// rows and columns follow partitions(n).
using BasisMatrix = std::vector<std::vector<RationalFunction>>;
const BasisMatrix& basis_matrix(Basis basis, int n);

/// "t*m(2,1) + (t^2 + 4*t + 1)*m(1,1,1)" style rendering for diagnostics.
std::string str(const SymFunc& f);
std::string str(const SymPoly& f);

}  // namespace chromgl
