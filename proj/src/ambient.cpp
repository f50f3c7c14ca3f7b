#include "logchern/ambient.hpp"

#include <array>
#include <vector>

#include "logchern/error.hpp"

namespace logchern {

AmbientModel AmbientModel::projective_space(int n) {
  if (n < 2) throw Error(Errc::invalid_argument, "projective_space: n must be >= 2, got " + std::to_string(n));
  return AmbientModel(ModelRef{ModelKind::projective_space, n, 1, 0});
}

AmbientModel AmbientModel::hypersurface(int n, std::int64_t q) {
  if (n < 2) throw Error(Errc::invalid_argument, "hypersurface: n must be >= 2, got " + std::to_string(n));
  if (q < 1) throw Error(Errc::invalid_argument, "hypersurface: q must be >= 1, got " + std::to_string(q));
  return AmbientModel(ModelRef{ModelKind::hypersurface, n, q, 0});
}

AmbientModel AmbientModel::hirzebruch(std::int64_t m) {
  if (m < 1) throw Error(Errc::invalid_argument, "hirzebruch: m must be >= 1, got " + std::to_string(m));
  return AmbientModel(ModelRef{ModelKind::hirzebruch, 2, 1, m});
}

CycleClass AmbientModel::divisor(std::span<const Rational> coords) const {
  return CycleClass(ref_, 1, std::vector<Rational>(coords.begin(), coords.end()));
}

CycleClass AmbientModel::divisor(std::initializer_list<std::int64_t> coords) const {
  std::vector<Rational> c;
  for (auto v : coords) c.emplace_back(v);
  return CycleClass(ref_, 1, std::move(c));
}

std::span<const std::string_view> AmbientModel::generator_names() const {
  static constexpr std::array<std::string_view, 1> pn{"H"};
  static constexpr std::array<std::string_view, 1> hyp{"h"};
  static constexpr std::array<std::string_view, 2> fm{"C0", "f"};
  switch (ref_.kind) {
    case ModelKind::projective_space: return pn;
    case ModelKind::hypersurface: return hyp;
    case ModelKind::hirzebruch: return fm;
  }
  return {};
}

CycleClass AmbientModel::generator(std::string_view name) const {
  auto names = generator_names();
  std::vector<Rational> c(names.size());
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) {
      c[i] = 1;
      return CycleClass(ref_, 1, std::move(c));
    }
  }
  throw Error(Errc::invalid_argument,
              "generator '" + std::string(name) + "' does not exist on " + std::string(to_string(ref_.kind)));
}

ChernData::ChernData(std::int64_t rank_, CycleClass c1_, CycleClass c2_)
    : rank(rank_), c1(std::move(c1_)), c2(std::move(c2_)) {
  if (rank < 1) throw Error(Errc::invalid_argument, "ChernData: rank must be >= 1");
  if (c1.grade() != 1 || c2.grade() != 2) throw Error(Errc::grade_mismatch, "ChernData: c1/c2 grades must be 1/2");
  if (c1.model() != c2.model()) throw Error(Errc::model_mismatch, "ChernData: c1 and c2 on different models");
}

ChernData tangent_chern(const AmbientModel& model) {
  const auto& ref = model.ref();
  const std::int64_t n = ref.dim;
  switch (ref.kind) {
    case ModelKind::projective_space:
      // Euler sequence: c(T) = (1+H)^{n+1}.
      return ChernData(n, CycleClass(ref, 1, {Rational(n + 1)}), CycleClass(ref, 2, {Rational(binomial(n + 1, 2))}));
    case ModelKind::hypersurface: {
      // c(T) = (1+h)^{n+2} / (1+qh), truncated.
      const std::int64_t q = ref.q;
      BigInt c2 = binomial(n + 2, 2) - BigInt(q) * (n + 2) + BigInt(q) * q;
      return ChernData(n, CycleClass(ref, 1, {Rational(n + 2 - q)}), CycleClass(ref, 2, {Rational(c2)}));
    }
    case ModelKind::hirzebruch:
      // c1 = 2C0 + (m+2)f; c2 = relative tangent x pulled-back base tangent = 4pt.
      return ChernData(2, model.divisor({2, ref.m + 2}), CycleClass(ref, 2, {Rational(4)}));
  }
  throw Error(Errc::internal, "tangent_chern: unknown model kind");
}

CycleClass canonical_class(const AmbientModel& model) { return neg(tangent_chern(model).c1); }

CycleClass default_polarization(const AmbientModel& model) {
  if (model.kind() == ModelKind::hirzebruch) return model.divisor({1, model.ref().m + 1});
  return model.divisor({1});
}

bool is_nef(const AmbientModel& model, const CycleClass& divisor) {
  if (divisor.model() != model.ref())
    throw Error(Errc::model_mismatch, "is_nef: divisor does not live on " + model.ref().display_name());
  if (divisor.grade() != 1)
    throw Error(Errc::grade_mismatch, "is_nef: expected a divisor class, got codimension " +
                                          std::to_string(divisor.grade()));
  if (model.kind() != ModelKind::hirzebruch) return divisor.coeff(0).sign() >= 0;
  // Test against the Mori cone generators f and C0.
  auto f = model.generator("f");
  auto c0 = model.generator("C0");
  return degree(mul(divisor, f)).sign() >= 0 && degree(mul(divisor, c0)).sign() >= 0;
}

}  // namespace logchern
