#include "logchern/rational.hpp"

#include <cctype>

#include "logchern/error.hpp"

namespace logchern {

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(Errc::invalid_argument, "rational with zero denominator");
  // The two-argument Raw_t constructor does not normalize; division does.
  value_ = Raw_t(num);
  value_ /= Raw_t(den);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw Error(Errc::invalid_argument, "division by zero");
  return Rational(Rational::Raw{}, a.value_ / b.value_);
}

std::string Rational::to_string() const {
  auto num = numerator().str();
  if (is_integer()) return num;
  return num + "/" + denominator().str();
}

namespace {

BigInt parse_int(std::string_view s, std::string_view whole, bool allow_sign) {
  std::size_t i = 0;
  bool neg = false;
  if (allow_sign && !s.empty() && s[0] == '-') {
    neg = true;
    i = 1;
  }
  if (i == s.size()) throw Error(Errc::parse_error, "malformed rational '" + std::string(whole) + "'");
  BigInt v = 0;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw Error(Errc::parse_error, "malformed rational '" + std::string(whole) + "'");
    v = v * 10 + (s[i] - '0');
  }
  return neg ? BigInt(-v) : v;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, text, true));
  auto num = parse_int(text.substr(0, slash), text, true);
  auto den = parse_int(text.substr(slash + 1), text, false);
  if (den == 0) throw Error(Errc::parse_error, "zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace logchern
