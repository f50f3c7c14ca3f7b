#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace logchern {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational number. Always stored reduced with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t v) : value_(v) {}  // NOLINT(implicit)
  Rational(const BigInt& v) : value_(v) {}  // NOLINT(implicit)
  Rational(const BigInt& num, const BigInt& den);
  Rational(std::int64_t num, std::int64_t den) : Rational(BigInt(num), BigInt(den)) {}

  BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  BigInt denominator() const { return boost::multiprecision::denominator(value_); }

  bool is_zero() const { return value_ == 0; }
  bool is_integer() const { return denominator() == 1; }
  int sign() const { return value_.sign(); }

  // "p" when the denominator is 1, otherwise "p/q".
  std::string to_string() const;
  // Accepts "p" or "p/q" with optional leading '-'; throws Error(parse_error).
  static Rational parse(std::string_view text);

  Rational operator-() const { return Rational(Raw{}, -value_); }
  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(Raw{}, a.value_ + b.value_); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(Raw{}, a.value_ - b.value_); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(Raw{}, a.value_ * b.value_); }
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ > b.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  using Raw_t = boost::multiprecision::cpp_rational;
  struct Raw {};
  Rational(Raw, Raw_t v) : value_(std::move(v)) {}

  Raw_t value_;
};

BigInt binomial(std::int64_t n, std::int64_t k);

}  // namespace logchern
