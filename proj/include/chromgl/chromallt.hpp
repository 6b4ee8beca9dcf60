/**
 * @file chromallt.hpp
 * @brief Chromatic quasisymmetric functions X_gamma(x; t) and vertical-strip
 * LLT polynomials G_sigma(x; t) by coloring enumeration, the orientation
 * e-expansion of G_sigma, and derived expansions.
 *
 * Colorings take values in [n], which is enough to see every monomial of a
 * degree-n symmetric function in n variables.
 */
#pragma once

#include <map>
#include <vector>

#include "chromgl/combinatorics.hpp"
#include "chromgl/symfunc.hpp"

namespace chromgl {

/// kappa[i-1] is the color of vertex i, in [1, n].
using Coloring = std::vector<int>;

/// #{ {i, j} in edges : i < j, kappa(i) < kappa(j) }
int asc(EdgeSet edges, const Coloring& kappa);
inline int asc(const IndiffGraph& gamma, const Coloring& kappa) { return asc(gamma.edges, kappa); }

inline constexpr int kMaxColoringSize = 8;

/// Full exponent table of X_gamma over proper colorings.
ExponentTable csf_table(const IndiffGraph& gamma);
/// X_gamma(x; t) in orbit-sum form; symmetry is checked.
SymPoly csf(const IndiffGraph& gamma);

/// Full exponent table of G_sigma: colorings strictly increasing along
/// Diag(sigma), ascents counted on Area(sigma).
ExponentTable llt_table(const SchroderPath& sigma);
SymPoly llt_vertical(const SchroderPath& sigma);

/// Sum over Diag-ascending orientations theta of Area u Diag of
/// (t - 1)^{#ascending Area edges} e_{type(theta)}.
SymFunc as_expansion(const SchroderPath& sigma);

/// t^{|E|} X_gamma(x; 1/t) == X_gamma(x; t). Guarded at n <= 6.
bool palindromicity_check(const IndiffGraph& gamma);

/// Coefficients of X_gamma in the PT basis, as Laurent polynomials.
/// Throws NotDivisible if a coefficient is not Laurent.
std::map<Partition, LaurentPoly> d_coeffs(const IndiffGraph& gamma);

struct EExpansion {
  SymFunc coeffs;                     ///< E basis
  std::vector<Partition> violations;  ///< coefficients outside Z>=0[t]
};
EExpansion e_expansion_X(const IndiffGraph& gamma);

/// True when p is a polynomial in t with nonnegative integer coefficients.
bool in_nonneg_poly_ring(const RationalFunction& p);

}  // namespace chromgl
