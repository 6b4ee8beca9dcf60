/**
 * @file exactnum.hpp
 * @brief Exact arithmetic: big integers and rationals (GMP), Laurent
 * polynomials and rational functions in one indeterminate t.
 *
 * Every value is kept in a canonical form so that structural equality is
 * mathematical equality:
 *   - LaurentPoly stores the coefficients of t^low .. t^high with nonzero
 *     end coefficients; zero is the empty list.
 *   - RationalFunction stores num/den with den an ordinary polynomial with
 *     nonzero constant term, monic, and coprime to num.
 */
#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "chromgl/error.hpp"

namespace chromgl {

using BigInt = mpz_class;
using Rational = mpq_class;

/// "p/q" or "p".
std::string to_string(const Rational& r);
/// Accepts "p/q" or "p" (optional sign). Throws InvalidArgument.
Rational parse_rational(std::string_view s);

Rational rational_pow(const Rational& base, int exponent);

class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  LaurentPoly(long c) : LaurentPoly(Rational(c)) {}  // NOLINT
  LaurentPoly(int c) : LaurentPoly(Rational(c)) {}   // NOLINT
  LaurentPoly(int low, std::vector<Rational> coeffs);

  static LaurentPoly monomial(const Rational& c, int exponent);
  /// The indeterminate t.
  static LaurentPoly t() { return monomial(1, 1); }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return is_zero() || (low_ == 0 && coeffs_.size() == 1); }
  /// True when no negative powers of t occur.
  bool is_polynomial() const { return is_zero() || low_ >= 0; }
  /// Exponent bounds; only meaningful when nonzero.
  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  Rational coeff(int exponent) const;
  const Rational& leading() const { return coeffs_.back(); }
  const Rational& trailing() const { return coeffs_.front(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Rational& c);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
  friend LaurentPoly operator*(const Rational& c, LaurentPoly a) { return a *= c; }
  LaurentPoly operator-() const;

  LaurentPoly pow(unsigned k) const;
  /// Multiplies by t^k.
  LaurentPoly shifted(int k) const;
  /// The substitution t -> 1/t.
  LaurentPoly inverted() const;

  /// Exact value at t = q. Throws DivisionByZero for q = 0 with negative powers.
  Rational eval(const Rational& q) const;

  /// True when every coefficient is an integer.
  bool is_integral() const;
  /// True when every coefficient is an integer >= 0.
  bool is_nonnegative_integral() const;

  /// "c_k*t^k + ... " with exponents descending, e.g. "t^2 + 4*t + 1".
  std::string str() const;
  static LaurentPoly parse(std::string_view s);

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  void normalize();

  int low_ = 0;
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

/// Quotient and remainder of ordinary polynomials (both must have low() >= 0).
struct PolyDivision {
  LaurentPoly quotient;
  LaurentPoly remainder;
};
PolyDivision poly_divmod(const LaurentPoly& a, const LaurentPoly& b);
/// Monic gcd of ordinary polynomials; gcd(0, 0) = 0.
LaurentPoly poly_gcd(LaurentPoly a, LaurentPoly b);

class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(const LaurentPoly& p);  // NOLINT(google-explicit-constructor)
  RationalFunction(const Rational& c) : RationalFunction(LaurentPoly(c)) {}  // NOLINT
  RationalFunction(long c) : RationalFunction(LaurentPoly(c)) {}             // NOLINT
  RationalFunction(int c) : RationalFunction(LaurentPoly(c)) {}              // NOLINT
  RationalFunction(const LaurentPoly& num, const LaurentPoly& den);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  /// True when the denominator is 1, i.e. the value is a Laurent polynomial.
  bool is_laurent() const { return den_.is_constant(); }
  bool is_constant() const { return is_laurent() && num_.is_constant(); }

  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  RationalFunction operator-() const;

  RationalFunction pow(int k) const;
  RationalFunction inverted() const;
  Rational eval(const Rational& q) const;

  std::string str() const;
  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

 private:
  void normalize();

  LaurentPoly num_;
  LaurentPoly den_;
};

std::ostream& operator<<(std::ostream& os, const RationalFunction& r);

/// The exact Laurent quotient; throws NotDivisible naming the remainder.
LaurentPoly ratfunc_to_laurent(const RationalFunction& r);

}  // namespace chromgl
