#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace hbox {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational number, always in lowest terms with a positive denominator,
// so structural equality is numeric equality.
class Scalar {
public:
  Scalar() = default;
  Scalar(std::int64_t v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(const BigInt& num, const BigInt& den);

  // Accepts "p", "-p" or "p/q" with q != 0; the result is normalized.
  static Scalar parse(std::string_view text);

  BigInt numerator() const;
  BigInt denominator() const;
  bool is_integer() const;

  // "p" for integers, "p/q" otherwise.
  std::string str() const;
  double to_double() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (b.value_ < a.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s);

private:
  using Rational = boost::multiprecision::cpp_rational;
  explicit Scalar(Rational r) : value_(std::move(r)) {}

  Rational value_;
};

Scalar midpoint(const Scalar& a, const Scalar& b);

}  // namespace hbox
