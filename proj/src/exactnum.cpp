#include "chromgl/exactnum.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <utility>

namespace chromgl {

std::string to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(std::string_view s) {
  std::string text(s);
  text.erase(std::remove_if(text.begin(), text.end(), [](unsigned char c) { return std::isspace(c); }),
             text.end());
  if (!text.empty() && text.front() == '+') text.erase(0, 1);
  if (text.empty()) throw InvalidArgument("empty rational literal");
  Rational r;
  if (r.set_str(text, 10) != 0) throw InvalidArgument("bad rational literal: " + std::string(s));
  if (r.get_den() == 0) throw DivisionByZero("zero denominator in literal: " + std::string(s));
  r.canonicalize();
  return r;
}

Rational rational_pow(const Rational& base, int exponent) {
  if (exponent < 0) {
    if (base == 0) throw DivisionByZero("0 raised to a negative power");
    return rational_pow(Rational(1) / base, -exponent);
  }
  Rational result = 1;
  Rational b = base;
  auto e = static_cast<unsigned>(exponent);
  while (e != 0) {
    if (e & 1U) result *= b;
    b *= b;
    e >>= 1U;
  }
  return result;
}

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly::LaurentPoly(const Rational& c) {
  if (c != 0) coeffs_.push_back(c);
}

LaurentPoly::LaurentPoly(int low, std::vector<Rational> coeffs) : low_(low), coeffs_(std::move(coeffs)) {
  normalize();
}

LaurentPoly LaurentPoly::monomial(const Rational& c, int exponent) {
  return LaurentPoly(exponent, {c});
}

void LaurentPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  std::size_t lead_zeros = 0;
  while (lead_zeros < coeffs_.size() && coeffs_[lead_zeros] == 0) ++lead_zeros;
  if (lead_zeros != 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead_zeros));
    low_ += static_cast<int>(lead_zeros);
  }
  if (coeffs_.empty()) low_ = 0;
}

Rational LaurentPoly::coeff(int exponent) const {
  if (is_zero() || exponent < low_ || exponent > high()) return 0;
  return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const int lo = std::min(low_, o.low_);
  const int hi = std::max(high(), o.high());
  std::vector<Rational> out(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i + static_cast<std::size_t>(low_ - lo)] = coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) out[i + static_cast<std::size_t>(o.low_ - lo)] += o.coeffs_[i];
  low_ = lo;
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return LaurentPoly(a.low_ + b.low_, std::move(out));
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    low_ = 0;
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& x : r.coeffs_) x = -x;
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
  LaurentPoly result(1);
  LaurentPoly b = *this;
  while (k != 0) {
    if (k & 1U) result *= b;
    k >>= 1U;
    if (k != 0) b = b * b;
  }
  return result;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r = *this;
  if (!r.is_zero()) r.low_ += k;
  return r;
}

LaurentPoly LaurentPoly::inverted() const {
  if (is_zero()) return {};
  std::vector<Rational> rev(coeffs_.rbegin(), coeffs_.rend());
  return LaurentPoly(-high(), std::move(rev));
}

Rational LaurentPoly::eval(const Rational& q) const {
  if (is_zero()) return 0;
  if (q == 0) {
    if (low_ < 0) throw DivisionByZero("pole at t = 0 in " + str());
    return coeff(0);
  }
  // Horner from the top, then scale by q^low.
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + *it;
  return acc * rational_pow(q, low_);
}

bool LaurentPoly::is_integral() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.get_den() == 1; });
}

bool LaurentPoly::is_nonnegative_integral() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rational& c) { return c.get_den() == 1 && c >= 0; });
}

std::string LaurentPoly::str() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int e = high(); e >= low_; --e) {
    Rational c = coeff(e);
    if (c == 0) continue;
    const bool negative = c < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational mag = abs(c);
    const bool print_coeff = e == 0 || mag != 1;
    if (print_coeff) out += mag.get_str();
    if (e != 0) {
      if (print_coeff) out += "*";
      out += "t";
      if (e != 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

namespace {

class LaurentParser {
 public:
  explicit LaurentParser(std::string_view s) : s_(s) {}

  LaurentPoly parse() {
    LaurentPoly result;
    skip_ws();
    if (pos_ == s_.size()) fail("empty polynomial");
    bool first = true;
    while (true) {
      skip_ws();
      if (pos_ == s_.size()) break;
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      result += parse_term() * Rational(sign);
    }
    return result;
  }

 private:
  LaurentPoly parse_term() {
    Rational c = 1;
    bool have_coeff = false;
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(peek()))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/')) ++pos_;
      c = parse_rational(s_.substr(start, pos_ - start));
      have_coeff = true;
      skip_ws();
      if (pos_ < s_.size() && peek() == '*') {
        ++pos_;
        skip_ws();
      } else {
        return LaurentPoly(c);
      }
    }
    if (pos_ >= s_.size() || peek() != 't') {
      if (have_coeff) fail("expected 't' after '*'");
      fail("expected a term");
    }
    ++pos_;
    skip_ws();
    int exponent = 1;
    if (pos_ < s_.size() && peek() == '^') {
      ++pos_;
      skip_ws();
      int esign = 1;
      if (pos_ < s_.size() && (peek() == '-' || peek() == '+')) {
        esign = peek() == '-' ? -1 : 1;
        ++pos_;
      }
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (start == pos_) fail("expected exponent");
      exponent = esign * std::stoi(std::string(s_.substr(start, pos_ - start)));
    }
    return LaurentPoly::monomial(c, exponent);
  }

  char peek() const { return s_[pos_]; }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw InvalidArgument("cannot parse Laurent polynomial '" + std::string(s_) + "': " + what + " at offset " +
                          std::to_string(pos_));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly LaurentPoly::parse(std::string_view s) { return LaurentParser(s).parse(); }

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.str(); }

// ---------------------------------------------------------------------------
// Ordinary polynomial helpers

PolyDivision poly_divmod(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (!a.is_polynomial() || !b.is_polynomial()) throw InvalidArgument("poly_divmod needs ordinary polynomials");
  const int db = b.high();
  std::vector<Rational> rem(static_cast<std::size_t>(std::max(a.is_zero() ? 0 : a.high() + 1, 0)));
  for (int e = 0; e < static_cast<int>(rem.size()); ++e) rem[static_cast<std::size_t>(e)] = a.coeff(e);
  const int da = static_cast<int>(rem.size()) - 1;
  if (da < db) return {LaurentPoly(), a};
  std::vector<Rational> quot(static_cast<std::size_t>(da - db + 1));
  const Rational lead_inv = Rational(1) / b.leading();
  std::vector<Rational> bc(static_cast<std::size_t>(db + 1));
  for (int e = 0; e <= db; ++e) bc[static_cast<std::size_t>(e)] = b.coeff(e);
  for (int k = da - db; k >= 0; --k) {
    Rational f = rem[static_cast<std::size_t>(k + db)] * lead_inv;
    quot[static_cast<std::size_t>(k)] = f;
    if (f == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= f * bc[static_cast<std::size_t>(j)];
  }
  return {LaurentPoly(0, std::move(quot)), LaurentPoly(0, std::move(rem))};
}

LaurentPoly poly_gcd(LaurentPoly a, LaurentPoly b) {
  while (!b.is_zero()) {
    LaurentPoly r = poly_divmod(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero()) a *= Rational(1) / a.leading();
  return a;
}

// ---------------------------------------------------------------------------
// RationalFunction

RationalFunction::RationalFunction(const LaurentPoly& p) : num_(p), den_(1) {}

RationalFunction::RationalFunction(const LaurentPoly& num, const LaurentPoly& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  // Move every power of t into the numerator.
  const int shift = den_.low();
  den_ = den_.shifted(-shift);
  num_ = num_.shifted(-shift);
  if (den_.high() > 0) {
    const int nshift = num_.low();
    LaurentPoly g = poly_gcd(num_.shifted(-nshift), den_);
    if (g.high() > 0) {
      num_ = poly_divmod(num_.shifted(-nshift), g).quotient.shifted(nshift);
      den_ = poly_divmod(den_, g).quotient;
    }
  }
  const Rational lead = den_.leading();
  if (lead != 1) {
    const Rational inv = Rational(1) / lead;
    num_ *= inv;
    den_ *= inv;
  }
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (den_.is_constant()) {
      if (num_.is_zero()) den_ = LaurentPoly(1);
      return *this;
    }
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  if (is_zero() || o.is_zero()) return *this = RationalFunction();
  num_ *= o.num_;
  den_ *= o.den_;
  if (!den_.is_constant()) normalize();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  if (o.is_zero()) throw DivisionByZero("division by the zero rational function");
  return *this *= RationalFunction(o.den_, o.num_);
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction RationalFunction::pow(int k) const {
  if (k < 0) return RationalFunction(den_, num_).pow(-k);
  return RationalFunction(num_.pow(static_cast<unsigned>(k)), den_.pow(static_cast<unsigned>(k)));
}

RationalFunction RationalFunction::inverted() const { return RationalFunction(num_.inverted(), den_.inverted()); }

Rational RationalFunction::eval(const Rational& q) const {
  Rational d = den_.eval(q);
  if (d == 0) throw DivisionByZero("pole at t = " + to_string(q) + " in " + str());
  return num_.eval(q) / d;
}

std::string RationalFunction::str() const {
  if (is_laurent()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& r) { return os << r.str(); }

LaurentPoly ratfunc_to_laurent(const RationalFunction& r) {
  if (r.is_laurent()) return r.num();
  // In canonical form the denominator is coprime to the numerator, so the
  // remainder of num mod den is the witness of non-divisibility.
  const int nshift = r.num().low();
  auto rem = poly_divmod(r.num().shifted(-nshift), r.den()).remainder.shifted(nshift);
  throw NotDivisible("not a Laurent polynomial: " + r.str() + " (remainder " + rem.str() + ")");
}

}  // namespace chromgl
