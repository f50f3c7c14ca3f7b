#include <random>

#include "doctest.h"
#include "logchern/ambient.hpp"
#include "logchern/chow.hpp"
#include "logchern/error.hpp"
#include "oracles.hpp"

using namespace logchern;

namespace {

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return Errc::internal;
}

CycleClass pt(const AmbientModel& f, std::int64_t c) { return CycleClass(f.ref(), 2, {Rational(c)}); }

}  // namespace

TEST_CASE("add") {
  auto f = AmbientModel::hirzebruch(5);
  CHECK(add(f.divisor({2, 5}), f.divisor({0, 2})) == f.divisor({2, 7}));
  auto p = AmbientModel::projective_space(4);
  CHECK(add(CycleClass::zero(p.ref(), 1), CycleClass::zero(p.ref(), 1)).is_zero());
  auto p7 = AmbientModel::projective_space(7);
  CHECK(add(p7.divisor({2}), p7.divisor({1})) == p7.divisor({3}));
}

TEST_CASE("add rejects model and grade mismatches") {
  auto p7 = AmbientModel::projective_space(7);
  auto p8 = AmbientModel::projective_space(8);
  auto hyp = AmbientModel::hypersurface(7, 1);
  CHECK(code_of([&] { (void)add(p7.divisor({1}), p8.divisor({1})); }) == Errc::model_mismatch);
  CHECK(code_of([&] { (void)add(p7.divisor({1}), hyp.divisor({1})); }) == Errc::model_mismatch);
  CHECK(code_of([&] { (void)add(p7.divisor({1}), CycleClass::zero(p7.ref(), 2)); }) == Errc::grade_mismatch);
}

TEST_CASE("mul on F_m") {
  for (std::int64_t m : {1, 2, 3, 7}) {
    CAPTURE(m);
    auto f = AmbientModel::hirzebruch(m);
    auto c0 = f.generator("C0");
    CHECK(mul(c0, c0) == pt(f, -m));
    CHECK(mul(f.divisor({2, m}), f.divisor({0, 2})) == pt(f, 4));
    CHECK(mul(f.divisor({0, 2}), f.divisor({0, 2})) == pt(f, 0));
  }
}

TEST_CASE("mul truncates past the dimension") {
  auto p = AmbientModel::projective_space(3);
  auto h2 = mul(p.generator("H"), p.generator("H"));
  CHECK(h2.grade() == 2);
  CHECK(code_of([&] { (void)mul(h2, h2); }) == Errc::grade_mismatch);
  auto f = AmbientModel::hirzebruch(1);
  CHECK(code_of([&] { (void)mul(pt(f, 1), f.generator("f")); }) == Errc::grade_mismatch);
}

TEST_CASE("degree") {
  auto p = AmbientModel::projective_space(6);
  CHECK(degree(power(p.generator("H"), 6)) == Rational(1));
  auto f = AmbientModel::hirzebruch(4);
  auto kd = f.divisor({0, -2});
  CHECK(degree(mul(kd, f.generator("C0"))) == Rational(-2));
  CHECK(code_of([&] { (void)degree(p.generator("H")); }) == Errc::grade_mismatch);
}

TEST_CASE("hypersurface degree matches the Bezout line count") {
  // Oracle: a random line meets a random degree-q hypersurface of P^{n+1}
  // in as many points as the restricted form has roots.
  struct Case {
    int n;
    int q;
  };
  for (auto [n, q] : {Case{7, 2}, Case{2, 3}, Case{3, 4}, Case{4, 2}, Case{2, 5}}) {
    CAPTURE(n);
    CAPTURE(q);
    int points = oracle::bezout_line_count(n, q, 1000u + static_cast<unsigned>(n * 31 + q));
    auto x = AmbientModel::hypersurface(n, q);
    CHECK(degree(power(x.generator("h"), n)) == Rational(points));
  }
  auto x = AmbientModel::hypersurface(7, 2);
  CHECK(degree(power(x.generator("h"), 7)) == Rational(2));
}

TEST_CASE("pair_with_polarization") {
  for (int n = 2; n <= 9; ++n) {
    auto p = AmbientModel::projective_space(n);
    auto a = CycleClass(p.ref(), 2, {Rational(5, 3)});
    CHECK(pair_with_polarization(a, p.generator("H"), n - 2) == Rational(5, 3));
    for (std::int64_t q = 1; q <= 5; ++q) {
      auto x = AmbientModel::hypersurface(n, q);
      auto b = CycleClass(x.ref(), 2, {Rational(7)});
      CHECK(pair_with_polarization(b, x.generator("h"), n - 2) == Rational(7 * q));
    }
  }
  auto f = AmbientModel::hirzebruch(3);
  CHECK(pair_with_polarization(pt(f, 9), f.divisor({1, 4}), 0) == Rational(9));
  auto p = AmbientModel::projective_space(4);
  CHECK(code_of([&] { (void)pair_with_polarization(CycleClass(p.ref(), 2, {Rational(1)}), p.generator("H"), 1); }) ==
        Errc::grade_mismatch);
  CHECK(code_of([&] {
          (void)pair_with_polarization(CycleClass(p.ref(), 2, {Rational(1)}), CycleClass(p.ref(), 2, {Rational(1)}), 2);
        }) == Errc::grade_mismatch);
}

TEST_CASE("F_m intersection matrix is [[-m, 1], [1, 0]]") {
  for (std::int64_t m = 1; m <= 60; ++m) {
    auto f = AmbientModel::hirzebruch(m);
    auto c0 = f.generator("C0");
    auto fib = f.generator("f");
    CHECK(degree(c0 * c0) == Rational(-m));
    CHECK(degree(c0 * fib) == Rational(1));
    CHECK(degree(fib * c0) == Rational(1));
    CHECK(degree(fib * fib) == Rational(0));
  }
}

TEST_CASE("to_string") {
  auto f = AmbientModel::hirzebruch(3);
  CHECK(f.divisor({2, 5}).to_string() == "2C0+5f");
  CHECK(f.divisor({-2, -5}).to_string() == "-2C0-5f");
  CHECK(f.divisor({0, 1}).to_string() == "f");
  CHECK(pt(f, 4).to_string() == "4pt");
  auto x = AmbientModel::hypersurface(5, 2);
  CHECK(CycleClass(x.ref(), 2, {Rational(3, 2)}).to_string() == "(3/2)h^2");
  CHECK(CycleClass::zero(x.ref(), 1).to_string() == "0");
}

// Random small classes on a spread of models.
namespace {

struct Gen {
  std::mt19937_64 rng{20240601};
  Rational r() {
    std::uniform_int_distribution<std::int64_t> num(-12, 12), den(1, 6);
    return Rational(num(rng), den(rng));
  }
  CycleClass cls(const ModelRef& m, int grade) {
    std::vector<Rational> c(m.basis_size(grade));
    for (auto& x : c) x = r();
    return CycleClass(m, grade, std::move(c));
  }
  int grade(int max) { return std::uniform_int_distribution<int>(0, max)(rng); }
};

std::vector<AmbientModel> sample_models() {
  return {AmbientModel::projective_space(2), AmbientModel::projective_space(5), AmbientModel::hypersurface(4, 3),
          AmbientModel::hypersurface(6, 2), AmbientModel::hirzebruch(1), AmbientModel::hirzebruch(4)};
}

}  // namespace

TEST_CASE("property: mul is commutative, associative and bilinear") {
  Gen g;
  for (const auto& model : sample_models()) {
    const auto& ref = model.ref();
    for (int iter = 0; iter < 150; ++iter) {
      int ga = g.grade(ref.dim);
      int gb = g.grade(ref.dim - ga);
      int gc = g.grade(ref.dim - ga - gb);
      auto a = g.cls(ref, ga);
      auto a2 = g.cls(ref, ga);
      auto b = g.cls(ref, gb);
      auto c = g.cls(ref, gc);
      auto s = g.r();
      CHECK(mul(a, b) == mul(b, a));
      CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
      CHECK(mul(add(a, a2), b) == add(mul(a, b), mul(a2, b)));
      CHECK(mul(scale(s, a), b) == scale(s, mul(a, b)));
      auto product = mul(a, b);
      for (const auto& x : product.coeffs()) {
        CHECK(x.denominator() > 0);
        CHECK(boost::multiprecision::gcd(boost::multiprecision::abs(x.numerator()), x.denominator()) == 1);
      }
    }
  }
}

TEST_CASE("property: degree is linear and degree(a*b) is symmetric") {
  Gen g;
  for (const auto& model : sample_models()) {
    const auto& ref = model.ref();
    for (int iter = 0; iter < 150; ++iter) {
      auto a = g.cls(ref, ref.dim);
      auto b = g.cls(ref, ref.dim);
      auto s = g.r();
      CHECK(degree(add(a, b)) == degree(a) + degree(b));
      CHECK(degree(scale(s, a)) == s * degree(a));
      int ga = g.grade(ref.dim);
      auto x = g.cls(ref, ga);
      auto y = g.cls(ref, ref.dim - ga);
      CHECK(degree(mul(x, y)) == degree(mul(y, x)));
    }
  }
}
