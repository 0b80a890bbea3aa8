#include "ratpull/rational.hpp"

#include <cctype>

#include "ratpull/error.hpp"

namespace ratpull {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(long long value) : value_(0) {
  mpz_class n;
  if (value >= 0) {
    n = static_cast<unsigned long>(value);
  } else {
    // -LLONG_MIN overflows; go through unsigned arithmetic.
    n = static_cast<unsigned long>(0ULL - static_cast<unsigned long long>(value));
    n = -n;
  }
  value_ = mpq_class(n);
}

Rational::Rational(const Integer& value) : value_(value) {}

Rational Rational::from_fraction(const Integer& num, const Integer& den) {
  if (den == 0) {
    throw Error(ErrorKind::ZeroDenominator, "zero denominator");
  }
  Rational r;
  r.value_ = mpq_class(num, den);
  r.value_.canonicalize();
  return r;
}

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  std::string_view num_part = body;
  std::string_view den_part = "1";
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num_part = body.substr(0, slash);
    den_part = body.substr(slash + 1);
  }
  if (!all_digits(num_part) || !all_digits(den_part)) {
    throw Error(ErrorKind::ParseError,
                "malformed rational '" + std::string(text) + "'");
  }
  Integer num(std::string(num_part), 10);
  Integer den(std::string(den_part), 10);
  if (negative) num = -num;
  return from_fraction(num, den);
}

std::string Rational::to_string() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) {
    throw Error(ErrorKind::ZeroDenominator, "division by zero");
  }
  value_ /= rhs.value_;
  return *this;
}

Rational rat(long long num, long long den) {
  if (den == 0) throw Error(ErrorKind::ZeroDenominator, "zero denominator");
  return Rational(num) / Rational(den);
}

Rational rat(const Integer& num, const Integer& den) {
  return Rational::from_fraction(num, den);
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Integer lcm(const Integer& a, const Integer& b) {
  Integer out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

}  // namespace ratpull
