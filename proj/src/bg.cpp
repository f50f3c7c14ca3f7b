#include "logchern/bg.hpp"

#include "logchern/error.hpp"

namespace logchern {

Rational bg_coefficient(std::int64_t rank) {
  if (rank < 1) throw Error(Errc::invalid_argument, "bg_coefficient: rank must be >= 1");
  return Rational(rank - 1, 2 * rank);
}

namespace {

void check_polarization(const CycleClass& c, const CycleClass& polarization) {
  if (polarization.grade() != 1) throw Error(Errc::grade_mismatch, "polarization must be a divisor class");
  if (c.model() != polarization.model())
    throw Error(Errc::model_mismatch, "polarization lives on " + polarization.model().display_name() +
                                          ", classes on " + c.model().display_name());
}

struct Evaluated {
  Rational c1_sq;
  Rational c2_eval;
};

Evaluated evaluate(const CycleClass& c1, const CycleClass& c2, const CycleClass& polarization) {
  check_polarization(c1, polarization);
  int k = c1.model().dim - 2;
  return {pair_with_polarization(c1 * c1, polarization, k), pair_with_polarization(c2, polarization, k)};
}

Rational discriminant_of(const Evaluated& e, std::int64_t rank) { return e.c2_eval - bg_coefficient(rank) * e.c1_sq; }

}  // namespace

Rational discriminant(const ChernData& chern, const CycleClass& polarization) {
  return discriminant_of(evaluate(chern.c1, chern.c2, polarization), chern.rank);
}

bool check_equality_n(const LogPair& pair, const CycleClass& polarization) {
  auto e = evaluate(log_c1(pair), log_c2(pair), polarization);
  return discriminant_of(e, pair.model().dim()).is_zero();
}

bool check_equality_n_plus_1(const LogPair& pair, const CycleClass& polarization) {
  auto e = evaluate(log_c1(pair), log_c2(pair), polarization);
  return discriminant_of(e, pair.model().dim() + 1).is_zero();
}

BGReport full_report(const LogPair& pair, const std::optional<CycleClass>& polarization) {
  const auto& model = pair.model();
  auto h = polarization.value_or(default_polarization(model));
  auto c1 = log_c1(pair);
  auto c2 = log_c2(pair);
  auto e = evaluate(c1, c2, h);
  const std::int64_t n = model.dim();
  auto disc_n = discriminant_of(e, n);
  auto disc_n1 = discriminant_of(e, n + 1);
  bool nef = is_nef(model, neg(canonical_class(model)) - pair.boundary());
  return BGReport{n, e.c1_sq, e.c2_eval, disc_n, disc_n.is_zero(), disc_n1.is_zero(), nef, h, c1, c2};
}

}  // namespace logchern
