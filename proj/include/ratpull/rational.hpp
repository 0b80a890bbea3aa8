#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

namespace ratpull {

using Integer = mpz_class;

/// Exact fraction in lowest terms with a positive denominator.
///
/// Backed by GMP's mpq_t; every constructor and arithmetic operation leaves
/// the value canonicalized, so structural equality is value equality.
class Rational {
 public:
  Rational() = default;
  Rational(long long value);  // NOLINT(google-explicit-constructor)
  explicit Rational(const Integer& value);

  /// Throws Error(ZeroDenominator) when `den == 0`.
  static Rational from_fraction(const Integer& num, const Integer& den);

  /// Accepts "p", "-p", "p/q", "-p/q" with decimal digits only, q > 0.
  /// Throws Error(ParseError) on malformed text, Error(ZeroDenominator) for q = 0.
  static Rational parse(std::string_view text);

  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  /// "p/q", or "p" when q = 1.
  std::string to_string() const;
  double to_double() const { return value_.get_d(); }

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  /// Throws Error(ZeroDenominator) on division by zero.
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

 private:
  mpq_class value_;
};

/// rat(2, 4) == 1/2, rat(3, -6) == -1/2.
Rational rat(long long num, long long den);
Rational rat(const Integer& num, const Integer& den);

Rational abs(const Rational& r);

Integer lcm(const Integer& a, const Integer& b);

}  // namespace ratpull

template <>
struct std::hash<ratpull::Rational> {
  std::size_t operator()(const ratpull::Rational& r) const {
    return std::hash<std::string>{}(r.to_string());
  }
};
