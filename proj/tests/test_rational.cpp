#include <random>

#include "doctest.h"
#include "logchern/error.hpp"
#include "logchern/rational.hpp"

using logchern::Errc;
using logchern::Error;
using logchern::Rational;

TEST_CASE("rationals are stored reduced with a positive denominator") {
  Rational a(6, -4);
  CHECK(a.numerator() == -3);
  CHECK(a.denominator() == 2);
  CHECK(a.to_string() == "-3/2");
  CHECK(Rational(10, 5).to_string() == "2");
  CHECK(Rational(0, -7).to_string() == "0");
  CHECK(Rational(0, -7).denominator() == 1);
}

TEST_CASE("arithmetic") {
  Rational n(7);
  CHECK(((n - Rational(1)) / (Rational(2) * n) * (n + Rational(1))).to_string() == "24/7");
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 3) - Rational(1, 3) == Rational(0));
  CHECK(Rational(3, 4) / Rational(3, 8) == Rational(2));
  CHECK(Rational(-1, 2) < Rational(1, 3));
  CHECK(Rational(-5, 3).sign() == -1);
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(Rational(1, 0), Error);
  try {
    (void)(Rational(1) / Rational(0));
    FAIL("expected division error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::invalid_argument);
  }
  for (const char* bad : {"", "-", "1/", "/2", "1/0", "a", "1.5", "1/-2", "--1"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(Rational::parse(bad), Error);
  }
}

TEST_CASE("parse accepts canonical and non-canonical input") {
  CHECK(Rational::parse("-12/8") == Rational(-3, 2));
  CHECK(Rational::parse("0") == Rational(0));
  CHECK(Rational::parse("123456789012345678901234567890").to_string() == "123456789012345678901234567890");
}

TEST_CASE("property: results are canonical and print/parse is lossless") {
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<std::int64_t> d(-1000, 1000);
  for (int i = 0; i < 2000; ++i) {
    auto den1 = d(rng);
    auto den2 = d(rng);
    if (den1 == 0 || den2 == 0) continue;
    Rational a(d(rng), den1);
    Rational b(d(rng), den2);
    for (const auto& r : {a + b, a - b, a * b}) {
      CHECK(r.denominator() > 0);
      CHECK(boost::multiprecision::gcd(boost::multiprecision::abs(r.numerator()), r.denominator()) == 1);
      CHECK(Rational::parse(r.to_string()) == r);
    }
  }
}
