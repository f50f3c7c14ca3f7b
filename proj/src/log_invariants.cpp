#include "logchern/log_invariants.hpp"

#include <limits>
#include <set>

#include "logchern/error.hpp"

namespace logchern {

namespace {

void check_effective(const AmbientModel& model, const Component& c) {
  const auto& cls = c.cls;
  auto where = "component '" + c.label + "'";
  if (cls.model() != model.ref())
    throw Error(Errc::model_mismatch, where + " does not live on " + model.ref().display_name());
  if (cls.grade() != 1) throw Error(Errc::grade_mismatch, where + " is not a divisor class");
  for (const auto& x : cls.coeffs())
    if (!x.is_integer()) throw Error(Errc::invalid_argument, where + " has non-integer coordinates");
  if (model.kind() == ModelKind::hirzebruch) {
    const auto& a = cls.coeff(0);
    const auto& b = cls.coeff(1);
    if (a.sign() < 0 || b.sign() < 0 || (a.is_zero() && b.is_zero()))
      throw Error(Errc::invalid_argument, where + " must have nonnegative (C0, f) coordinates, not both zero");
  } else if (cls.coeff(0).sign() <= 0) {
    throw Error(Errc::invalid_argument, where + " must have positive degree");
  }
}

}  // namespace

LogPair::LogPair(AmbientModel model, std::vector<Component> components)
    : model_(model), components_(std::move(components)) {
  std::set<std::string> seen;
  for (const auto& c : components_) {
    if (!seen.insert(c.label).second) throw Error(Errc::invalid_argument, "duplicate component label '" + c.label + "'");
    check_effective(model_, c);
  }
}

CycleClass LogPair::boundary() const {
  auto d = CycleClass::zero(model_.ref(), 1);
  for (const auto& c : components_) d = d + c.cls;
  return d;
}

LogPair make_degree_pair(const AmbientModel& model, const std::vector<std::int64_t>& degrees) {
  if (model.kind() == ModelKind::hirzebruch)
    throw Error(Errc::invalid_argument, "degree lists need a Picard-rank-one model");
  std::vector<Component> comps;
  comps.reserve(degrees.size());
  for (std::size_t i = 0; i < degrees.size(); ++i)
    comps.push_back({"D" + std::to_string(i + 1), model.divisor({degrees[i]})});
  return LogPair(model, std::move(comps));
}

CycleClass log_c1(const LogPair& pair) { return tangent_chern(pair.model()).c1 - pair.boundary(); }

CycleClass log_c2(const LogPair& pair) {
  const auto& model = pair.model();
  auto d = pair.boundary();
  auto c2 = tangent_chern(model).c2 + canonical_class(model) * d + d * d;
  // sum_{i<j} D_i D_j accumulated as sum_j (D_1 + ... + D_{j-1}) D_j.
  auto prefix = CycleClass::zero(model.ref(), 1);
  auto cross = CycleClass::zero(model.ref(), 2);
  for (const auto& c : pair.components()) {
    cross = cross + prefix * c.cls;
    prefix = prefix + c.cls;
  }
  return c2 - cross;
}

ChernData extension_chern(const LogPair& pair) {
  return ChernData(pair.model().dim() + 1, log_c1(pair), log_c2(pair));
}

Rational slope(const AmbientModel& model, const CycleClass& c1, std::int64_t rank, const CycleClass& polarization) {
  if (rank < 1) throw Error(Errc::invalid_argument, "slope: rank must be >= 1");
  if (c1.model() != model.ref()) throw Error(Errc::model_mismatch, "slope: c1 not on " + model.ref().display_name());
  if (c1.grade() != 1) throw Error(Errc::grade_mismatch, "slope: c1 must be a divisor class");
  return pair_with_polarization(c1, polarization, model.dim() - 1) / Rational(rank);
}

Rational wedge_cotangent_slope(int n, int r) {
  if (n < 2) throw Error(Errc::invalid_argument, "wedge_cotangent_slope: n must be >= 2");
  if (r < 1 || r > n)
    throw Error(Errc::invalid_argument, "wedge_cotangent_slope: r = " + std::to_string(r) + " outside [1, " +
                                            std::to_string(n) + "]");
  auto model = AmbientModel::projective_space(n);
  // c1(Lambda^r E) = C(rk E - 1, r - 1) c1(E) with c1(Omega^1) = -(n+1)H.
  auto c1 = scale(Rational(binomial(n - 1, r - 1)), canonical_class(model));
  auto rank = binomial(n, r);
  if (rank > BigInt(std::numeric_limits<std::int64_t>::max()))
    throw Error(Errc::invalid_argument, "wedge_cotangent_slope: rank overflows");
  return slope(model, c1, rank.convert_to<std::int64_t>(), default_polarization(model));
}

}  // namespace logchern
