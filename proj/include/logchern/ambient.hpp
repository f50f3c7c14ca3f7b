#pragma once

#include <cstdint>
#include <span>
#include <string_view>

#include "logchern/chow.hpp"

namespace logchern {

// A validated ambient variety: P^n (n >= 2), a smooth degree-q hypersurface
// in P^{n+1} (n >= 2, q >= 1), or the Hirzebruch surface F_m (m >= 1).
// Hypersurface smoothness is assumed, not checked.
class AmbientModel {
 public:
  static AmbientModel projective_space(int n);
  static AmbientModel hypersurface(int n, std::int64_t q);
  static AmbientModel hirzebruch(std::int64_t m);

  const ModelRef& ref() const { return ref_; }
  ModelKind kind() const { return ref_.kind; }
  int dim() const { return ref_.dim; }

  // Divisor class from integer or rational coordinates in the Picard basis:
  // (H) on P^n, (h) on hypersurfaces, (C0, f) on F_m.
  CycleClass divisor(std::span<const Rational> coords) const;
  CycleClass divisor(std::initializer_list<std::int64_t> coords) const;
  // "H", "h", "C0", "f" as appropriate; throws for a name foreign to the kind.
  CycleClass generator(std::string_view name) const;
  std::span<const std::string_view> generator_names() const;

  friend bool operator==(const AmbientModel&, const AmbientModel&) = default;

 private:
  explicit AmbientModel(ModelRef ref) : ref_(ref) {}
  ModelRef ref_;
};

struct ChernData {
  std::int64_t rank;
  CycleClass c1;
  CycleClass c2;

  ChernData(std::int64_t rank, CycleClass c1, CycleClass c2);
  friend bool operator==(const ChernData&, const ChernData&) = default;
};

ChernData tangent_chern(const AmbientModel& model);
CycleClass canonical_class(const AmbientModel& model);
CycleClass default_polarization(const AmbientModel& model);
bool is_nef(const AmbientModel& model, const CycleClass& divisor);

}  // namespace logchern
