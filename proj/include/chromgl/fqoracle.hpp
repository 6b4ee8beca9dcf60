/**
 * @file fqoracle.hpp
 * @brief Brute-force computations in UT_n(F_q) and GL_n(F_q) for prime q:
 * superclass functions, induction of superclass functions to unipotent
 * class functions of GL_n, and Hessenberg point counts over F_q.
 *
 * UT_gamma is the normal pattern subgroup of unipotent upper triangular
 * matrices vanishing at the positions (i, j) with {i, j} in E(gamma), and
 * UT_gamma° the elements of UT_gamma lying in no UT_sigma with sigma strictly
 * larger.
 */
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "chromgl/combinatorics.hpp"
#include "chromgl/exactnum.hpp"

namespace chromgl {

inline constexpr int kMaxMatrixSize = 5;
/// Class functions on UT_n are supported up to this n.
inline constexpr int kMaxClassFnSize = 4;
/// Default bound on |GL_n(F_q)| for full enumeration.
inline constexpr long kGroupLimit = 2'000'000;
/// Bound once large groups are enabled.
inline constexpr long kLargeGroupLimit = 30'000'000;

/// Opt in to enumerations up to kLargeGroupLimit (e.g. GL_4(F_3)).
void set_allow_large_groups(bool allow);
bool allow_large_groups();

/// q in {2, 3, 5, 7}; throws InvalidArgument otherwise.
void check_field(int q);

/// n x n matrix over F_q, q prime, n <= kMaxMatrixSize.
struct Matrix {
  int n = 0;
  int q = 2;
  std::array<std::uint8_t, kMaxMatrixSize * kMaxMatrixSize> a{};

  Matrix() = default;
  Matrix(int size, int field);
  static Matrix identity(int size, int field);
  /// Row-major digit string, e.g. "1101" for [[1,1],[0,1]].
  static Matrix parse(const std::string& digits, int field);

  int at(int i, int j) const { return a[static_cast<std::size_t>(i * kMaxMatrixSize + j)]; }
  void set(int i, int j, int v);
  std::string str() const;

  friend Matrix operator*(const Matrix& x, const Matrix& y);
  friend Matrix operator-(const Matrix& x, const Matrix& y);
  friend bool operator==(const Matrix& x, const Matrix& y) = default;
};

/// Gauss-Jordan inverse; returns false when x is singular.
bool invert(const Matrix& x, Matrix& out);

/// Block-diagonal unipotent Jordan matrix J_lambda.
Matrix jordan(const Partition& lambda, int q);

bool is_unipotent_upper(const Matrix& u);
/// The largest gamma with u in UT_gamma. Throws InvalidArgument if u is not
/// unipotent upper triangular.
IndiffGraph superclass_label(const Matrix& u);

BigInt gl_order(int n, int q);
BigInt ut_order(int n, int q);
/// [n]_q! = prod_i (q^i - 1)/(q - 1)
BigInt q_factorial(int n, int q);

// ---------------------------------------------------------------------------
// Superclass functions

struct ClassFnUT {
  int n = 0;
  int q = 2;
  std::map<IndiffGraph, Rational> values;  ///< one entry per gamma in IG_n

  Rational at(const IndiffGraph& gamma) const;
  friend bool operator==(const ClassFnUT&, const ClassFnUT&) = default;
  std::string str() const;
};

ClassFnUT zero_class_fn(int n, int q);
ClassFnUT operator+(const ClassFnUT& a, const ClassFnUT& b);
ClassFnUT operator-(const ClassFnUT& a, const ClassFnUT& b);
ClassFnUT operator*(const Rational& c, const ClassFnUT& a);

/// Indicator of the superclass UT_gamma°.
ClassFnUT delta(const IndiffGraph& gamma, int q);
/// Indicator of UT_gamma: 1 on superclasses sigma containing gamma.
ClassFnUT delta_bar(const IndiffGraph& gamma, int q);
/// q^{|E(gamma)|} delta_bar(gamma).
ClassFnUT chi_bar(const IndiffGraph& gamma, int q);
/// sum over sigma in gamma of mu(sigma, gamma) chi_bar(sigma).
ClassFnUT chi_super(const IndiffGraph& gamma, int q);
/// sum over S in Diag(sigma) of (-1)^{|Diag \ S|} chi_bar(Area u S).
ClassFnUT psi_pseudo(const SchroderPath& sigma, int q);
/// psi_pseudo(mesa(pi)) == chi_super(graph_of(pi)).
bool psi_mesa_check(const DyckPath& pi, int q);

/// Permutation character of UT_n on UT_n / UT_gamma, by counting fixed
/// cosets at one representative per superclass.
ClassFnUT chi_bar_coset_oracle(const IndiffGraph& gamma, int q);

/// |UT_gamma°| for each gamma in IG_n, by enumeration of UT_n.
const std::map<IndiffGraph, BigInt>& superclass_sizes(int n, int q);

/// (1/|UT_n|) sum_gamma |UT_gamma°| phi(gamma) psi(gamma).
Rational inner_product_UT(const ClassFnUT& phi, const ClassFnUT& psi);

// ---------------------------------------------------------------------------
// Unipotent class functions of GL_n

struct UnipClassFn {
  int n = 0;
  int q = 2;
  std::map<Partition, Rational> values;  ///< one entry per partition of n

  Rational at(const Partition& lambda) const;
  friend bool operator==(const UnipClassFn&, const UnipClassFn&) = default;
  std::string str() const;
};

UnipClassFn operator+(const UnipClassFn& a, const UnipClassFn& b);
UnipClassFn operator*(const Rational& c, const UnipClassFn& a);

/// Ind_UT^GL(phi)(J_lambda) = (1/|UT_n|) sum over x in GL_n with
/// x^{-1} J_lambda x in UT_n of phi(label(x^{-1} J_lambda x)).
/// With require_integral, a non-integer value throws InternalError.
UnipClassFn induce_to_GL(const ClassFnUT& phi, bool require_integral = false);

/// Ind_{UT_gamma}^{GL_n}(1) at each J_lambda, counted directly from the
/// pattern condition over GL_n.
UnipClassFn induce_trivial_from_pattern(const IndiffGraph& gamma, int q);

/// Canonical coset representatives of GL_n / B_n, one per flag.
std::vector<Matrix> flags(int n, int q);

/// #{flags gB : g^{-1} A g strictly upper triangular and zero at every
/// position (i, j) with {i, j} in E(gamma)}.
long hessenberg_count(const IndiffGraph& gamma, const Matrix& a);

/// |{x in GL_n : x g = g x}|
long centralizer_order(const Matrix& g);

}  // namespace chromgl
