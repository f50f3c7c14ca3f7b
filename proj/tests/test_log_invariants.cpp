#include <algorithm>
#include <random>

#include "doctest.h"
#include "logchern/error.hpp"
#include "logchern/log_invariants.hpp"
#include "oracles.hpp"

using namespace logchern;

namespace {

LogPair hirzebruch_pair(std::int64_t m) {
  auto f = AmbientModel::hirzebruch(m);
  return LogPair(f, {{"C0", f.divisor({1, 0})}, {"Cinf", f.divisor({1, m})}});
}

CycleClass h2(const AmbientModel& model, std::int64_t c) { return CycleClass(model.ref(), 2, {Rational(c)}); }

}  // namespace

TEST_CASE("log_c1") {
  for (int n = 2; n <= 12; ++n) {
    auto p = AmbientModel::projective_space(n);
    CHECK(log_c1(make_degree_pair(p, {1})) == p.divisor({n}));
  }
  for (std::int64_t m = 1; m <= 8; ++m) CHECK(log_c1(hirzebruch_pair(m)) == AmbientModel::hirzebruch(m).divisor({0, 2}));
  auto x = AmbientModel::hypersurface(5, 3);
  CHECK(log_c1(LogPair(x, {})) == tangent_chern(x).c1);
}

TEST_CASE("log_c2") {
  for (int n = 2; n <= 12; ++n) {
    auto p = AmbientModel::projective_space(n);
    CHECK(log_c2(make_degree_pair(p, {1})) == h2(p, n * (n - 1) / 2));
  }
  for (std::int64_t m = 1; m <= 8; ++m) CHECK(log_c2(hirzebruch_pair(m)).is_zero());

  // Direct evaluation: 28 - 8*4 + 16 - (2*1 + 2*1 + 1*1).
  auto p7 = AmbientModel::projective_space(7);
  auto expected = oracle::pn_log(7, {2, 1, 1});
  CHECK(expected.c2 == 28 - 8 * 4 + 16 - 5);
  CHECK(log_c2(make_degree_pair(p7, {2, 1, 1})) == h2(p7, 7));

  auto f = AmbientModel::hirzebruch(2);
  CHECK(log_c2(LogPair(f, {})) == tangent_chern(f).c2);
}

TEST_CASE("extension_chern") {
  for (int n = 2; n <= 6; ++n) {
    auto p = AmbientModel::projective_space(n);
    auto e = extension_chern(LogPair(p, {}));
    CHECK(e.rank == n + 1);
    CHECK(e.c1 == p.divisor({n + 1}));
    CHECK(e.c2 == h2(p, (n + 1) * n / 2));
  }
  auto p7 = AmbientModel::projective_space(7);
  auto e7 = extension_chern(make_degree_pair(p7, {2, 1, 1}));
  CHECK(e7.rank == 8);
  CHECK(e7.c1 == p7.divisor({4}));
  CHECK(e7.c2 == h2(p7, 7));
  auto ef = extension_chern(hirzebruch_pair(5));
  CHECK(ef.rank == 3);
  CHECK(ef.c1 == AmbientModel::hirzebruch(5).divisor({0, 2}));
  CHECK(ef.c2.is_zero());
}

TEST_CASE("slope") {
  for (int n = 2; n <= 12; ++n) {
    auto p = AmbientModel::projective_space(n);
    auto h = p.generator("H");
    CHECK(slope(p, p.divisor({-(n + 1)}), n, h) == Rational(-(n + 1), n));
    CHECK(slope(p, CycleClass::zero(p.ref(), 1), 5, h) == Rational(0));
    // Omega^1(log H): c1 = K + H = -nH, rank n.
    CHECK(slope(p, neg(log_c1(make_degree_pair(p, {1}))), n, h) == Rational(-1));
  }
  auto p = AmbientModel::projective_space(3);
  CHECK_THROWS_AS(slope(p, CycleClass::zero(p.ref(), 2), 1, p.generator("H")), Error);
  CHECK_THROWS_AS(slope(p, p.generator("H"), 0, p.generator("H")), Error);
  auto f = AmbientModel::hirzebruch(2);
  CHECK(slope(f, CycleClass::zero(f.ref(), 1), 3, default_polarization(f)) == Rational(0));
}

TEST_CASE("wedge_cotangent_slope") {
  for (int n = 2; n <= 9; ++n) CHECK(wedge_cotangent_slope(n, n) == Rational(-(n + 1)));
  CHECK(wedge_cotangent_slope(7, 2) == Rational(-16, 7));
  // C(4,2) * 6 / C(5,3) = 36/10.
  CHECK(wedge_cotangent_slope(5, 3) == Rational(-36, 10));
  CHECK_THROWS_AS(wedge_cotangent_slope(5, 0), Error);
  CHECK_THROWS_AS(wedge_cotangent_slope(5, 6), Error);
  for (int n = 2; n <= 12; ++n)
    for (int r = 1; r <= n; ++r) CHECK(wedge_cotangent_slope(n, r) * Rational(n) + Rational(r * (n + 1)) == Rational(0));
}

TEST_CASE("LogPair validation") {
  auto p = AmbientModel::projective_space(4);
  CHECK_THROWS_AS(LogPair(p, {{"A", p.divisor({1})}, {"A", p.divisor({2})}}), Error);
  CHECK_THROWS_AS(LogPair(p, {{"A", p.divisor({0})}}), Error);
  CHECK_THROWS_AS(LogPair(p, {{"A", p.divisor({-1})}}), Error);
  CHECK_THROWS_AS(LogPair(p, {{"A", p.divisor(std::vector<Rational>{Rational(1, 2)})}}), Error);
  CHECK_THROWS_AS(LogPair(p, {{"A", AmbientModel::projective_space(5).divisor({1})}}), Error);
  auto f = AmbientModel::hirzebruch(2);
  CHECK_THROWS_AS(LogPair(f, {{"A", f.divisor({0, 0})}}), Error);
  CHECK_THROWS_AS(LogPair(f, {{"A", f.divisor({-1, 3})}}), Error);
  CHECK_NOTHROW(LogPair(f, {{"A", f.divisor({0, 1})}, {"B", f.divisor({0, 1})}}));
  CHECK_THROWS_AS(make_degree_pair(f, {1}), Error);
}

TEST_CASE("property: empty divisor reduces to the tangent bundle") {
  std::vector<AmbientModel> models;
  for (int n = 2; n <= 8; ++n) models.push_back(AmbientModel::projective_space(n));
  for (int n = 2; n <= 6; ++n)
    for (std::int64_t q = 1; q <= 5; ++q) models.push_back(AmbientModel::hypersurface(n, q));
  for (std::int64_t m = 1; m <= 10; ++m) models.push_back(AmbientModel::hirzebruch(m));
  for (const auto& model : models) {
    LogPair empty(model, {});
    auto t = tangent_chern(model);
    CHECK(log_c1(empty) == t.c1);
    CHECK(log_c2(empty) == t.c2);
  }
}

TEST_CASE("property: log_c2 is invariant under permutation of components") {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<std::int64_t> deg(1, 4), coord(0, 3);
  for (int iter = 0; iter < 200; ++iter) {
    int n = 2 + static_cast<int>(rng() % 8);
    auto p = AmbientModel::projective_space(n);
    std::vector<std::int64_t> d(1 + rng() % 5);
    for (auto& x : d) x = deg(rng);
    auto base = log_c2(make_degree_pair(p, d));
    std::shuffle(d.begin(), d.end(), rng);
    CHECK(log_c2(make_degree_pair(p, d)) == base);

    auto f = AmbientModel::hirzebruch(1 + static_cast<std::int64_t>(rng() % 5));
    std::vector<Component> comps;
    for (std::size_t i = 0; i < 1 + rng() % 4; ++i) {
      std::int64_t a = coord(rng);
      std::int64_t b = coord(rng);
      if (a == 0 && b == 0) b = 1;
      comps.push_back({"D" + std::to_string(i), f.divisor({a, b})});
    }
    auto fbase = log_c2(LogPair(f, comps));
    std::shuffle(comps.begin(), comps.end(), rng);
    CHECK(log_c2(LogPair(f, comps)) == fbase);
  }
}

TEST_CASE("property: merging two components adds d_i d_j H^2 to c2 and keeps c1") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<std::int64_t> deg(1, 5);
  for (int iter = 0; iter < 200; ++iter) {
    int n = 2 + static_cast<int>(rng() % 10);
    auto p = AmbientModel::projective_space(n);
    std::vector<std::int64_t> d(2 + rng() % 4);
    for (auto& x : d) x = deg(rng);
    std::vector<std::int64_t> merged(d.begin() + 2, d.end());
    merged.push_back(d[0] + d[1]);
    auto before = make_degree_pair(p, d);
    auto after = make_degree_pair(p, merged);
    CHECK(log_c1(after) == log_c1(before));
    CHECK(log_c2(after) - log_c2(before) == h2(p, d[0] * d[1]));
  }
}

TEST_CASE("property: extension sheaf shares c1 and c2") {
  std::mt19937_64 rng(5);
  for (int iter = 0; iter < 100; ++iter) {
    auto x = AmbientModel::hypersurface(2 + static_cast<int>(rng() % 8), 1 + static_cast<std::int64_t>(rng() % 6));
    std::vector<std::int64_t> d(rng() % 5, 1);
    auto pair = make_degree_pair(x, d);
    auto e = extension_chern(pair);
    CHECK(e.rank == x.dim() + 1);
    CHECK(e.c1 == log_c1(pair));
    CHECK(e.c2 == log_c2(pair));
  }
}
