#pragma once

#include <cstdint>
#include <optional>

#include "logchern/log_invariants.hpp"

namespace logchern {

// Evaluation of a log pair against the Bogomolov-Gieseker discriminant.
//
// rank is dim X (the log tangent bundle). c1_sq and c2_eval are c1^2.H^{n-2}
// and c2.H^{n-2} of the log tangent bundle; both equality flags are derived
// from this single pair of numbers:
//
//   equality_n         <=> c2_eval - (n-1)/(2n)     c1_sq == 0
//   equality_n_plus_1  <=> c2_eval - n/(2(n+1))    c1_sq == 0
//
// The second is the discriminant of the rank n+1 extension sheaf, which has
// the same c1 and c2. Semistability is never decided here.
struct BGReport {
  std::int64_t rank;
  Rational c1_sq;
  Rational c2_eval;
  Rational discriminant;
  bool equality_n;
  bool equality_n_plus_1;
  bool minus_k_plus_d_nef;
  CycleClass polarization;
  // Log Chern classes the numbers were computed from.
  CycleClass log_c1;
  CycleClass log_c2;

  friend bool operator==(const BGReport&, const BGReport&) = default;
};

// (r-1)/(2r)
Rational bg_coefficient(std::int64_t rank);

// (c2 - (r-1)/(2r) c1^2) . H^{n-2}. On a surface the pairing is the degree map.
Rational discriminant(const ChernData& chern, const CycleClass& polarization);

bool check_equality_n(const LogPair& pair, const CycleClass& polarization);
bool check_equality_n_plus_1(const LogPair& pair, const CycleClass& polarization);

// polarization defaults to default_polarization(pair.model()).
BGReport full_report(const LogPair& pair, const std::optional<CycleClass>& polarization = std::nullopt);

}  // namespace logchern
