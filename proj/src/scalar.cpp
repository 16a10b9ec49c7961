#include "hbox/scalar.hpp"

#include "hbox/errors.hpp"

#include <cctype>
#include <ostream>

namespace hbox {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInt parse_integer(std::string_view s) {
  bool negative = false;
  if (s.front() == '-' || s.front() == '+') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  BigInt v = 0;
  for (char c : s) v = v * 10 + (c - '0');
  return negative ? BigInt(-v) : v;
}

}  // namespace

Scalar::Scalar(const BigInt& num, const BigInt& den) {
  if (den == 0) throw InputError("rational with zero denominator");
  value_ = den < 0 ? Rational(BigInt(-num), BigInt(-den)) : Rational(num, den);
}

Scalar Scalar::parse(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  if (!is_integer_literal(num)) {
    throw InputError("malformed rational '" + std::string(text) + "'");
  }
  if (slash == std::string_view::npos) return Scalar(parse_integer(num), BigInt(1));
  std::string_view den = text.substr(slash + 1);
  if (!is_integer_literal(den)) {
    throw InputError("malformed rational '" + std::string(text) + "'");
  }
  return Scalar(parse_integer(num), parse_integer(den));
}

BigInt Scalar::numerator() const { return boost::multiprecision::numerator(value_); }
BigInt Scalar::denominator() const { return boost::multiprecision::denominator(value_); }
bool Scalar::is_integer() const { return denominator() == 1; }

std::string Scalar::str() const {
  if (is_integer()) return numerator().str();
  return numerator().str() + "/" + denominator().str();
}

double Scalar::to_double() const { return value_.convert_to<double>(); }

Scalar Scalar::operator-() const { return Scalar(Rational(-value_)); }
Scalar& Scalar::operator+=(const Scalar& o) { value_ += o.value_; return *this; }
Scalar& Scalar::operator-=(const Scalar& o) { value_ -= o.value_; return *this; }
Scalar& Scalar::operator*=(const Scalar& o) { value_ *= o.value_; return *this; }
Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.value_ == 0) throw InputError("division by zero");
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

Scalar midpoint(const Scalar& a, const Scalar& b) { return (a + b) / Scalar(2); }

}  // namespace hbox
