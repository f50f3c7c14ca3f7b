#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "logchern/ambient.hpp"

namespace logchern {

struct Component {
  std::string label;
  CycleClass cls;

  friend bool operator==(const Component&, const Component&) = default;
};

// An ambient model with an ordered list of labelled SNC components. The list
// is authoritative: two components may share a numerical class. The SNC
// condition itself is assumed.
class LogPair {
 public:
  LogPair(AmbientModel model, std::vector<Component> components);

  const AmbientModel& model() const { return model_; }
  const std::vector<Component>& components() const { return components_; }
  // D = sum of the components (zero divisor when empty).
  CycleClass boundary() const;

 private:
  AmbientModel model_;
  std::vector<Component> components_;
};

// Components labelled D1, D2, ... with classes d_i * (Picard generator) on a
// Picard-rank-one model.
LogPair make_degree_pair(const AmbientModel& model, const std::vector<std::int64_t>& degrees);

// c1(T_X(-log D)) = c1(T_X) - D.
CycleClass log_c1(const LogPair& pair);
// c2(T_X(-log D)) = c2(T_X) + K.D + D^2 - sum_{i<j} D_i.D_j.
CycleClass log_c2(const LogPair& pair);
// Rank dim+1 extension of T_X(-log D) by O_X; shares c1 and c2 with it for
// every extension class, so no class is taken.
ChernData extension_chern(const LogPair& pair);

Rational slope(const AmbientModel& model, const CycleClass& c1, std::int64_t rank, const CycleClass& polarization);
// Slope of the r-th exterior power of the cotangent bundle of P^n.
Rational wedge_cotangent_slope(int n, int r);

}  // namespace logchern
