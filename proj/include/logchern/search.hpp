#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "logchern/bg.hpp"

namespace logchern {

enum class Family { pn, hypersurface };
enum class Mode { equality_n, equality_n_plus_1, either };

std::string_view to_string(Family f);
std::string_view to_string(Mode m);

struct SearchConfig {
  Family family = Family::pn;
  int n_min = 2;
  int n_max = 2;
  Mode mode = Mode::either;
  bool require_nef = true;
  // Drops D = 0 and, on P^n, D = a single hyperplane.
  bool exclude_trivial = true;
  // Cap on total degree sum d_i (= l on hypersurfaces). Default: n+1 with the
  // nef filter, 3(n+1) without.
  std::optional<std::int64_t> s_max;
  // Hypersurface family only.
  std::int64_t q_min = 2;
  std::int64_t q_max = 2;
  unsigned workers = 1;

  std::int64_t effective_s_max(int n) const;
  // Throws Error(empty_range / invalid_argument).
  void validate() const;
};

struct EqualityCase {
  Family family;
  int n;
  std::int64_t q;                         // 1 on P^n
  std::vector<std::int64_t> partition;    // non-increasing component degrees
  bool satisfies_n;
  bool satisfies_n_plus_1;
  bool nef;
  BGReport report;

  std::size_t length() const { return partition.size(); }
  friend bool operator==(const EqualityCase&, const EqualityCase&) = default;
};

// Closed-form evaluation used to scan the search box. Every hit is
// re-evaluated through full_report before it is emitted.
struct FastEval {
  bool nef;
  bool equality_n;
  bool equality_n_plus_1;
  friend bool operator==(const FastEval&, const FastEval&) = default;
};
FastEval fast_eval_pn(int n, std::span<const std::int64_t> partition);
FastEval fast_eval_hypersurface(int n, std::int64_t q, std::int64_t l);

// Calls visit on every non-increasing partition with 0 <= sum <= max_sum
// (the empty partition included).
void visit_partitions(std::int64_t max_sum, const std::function<void(std::span<const std::int64_t>)>& visit);

bool mode_matches(Mode mode, bool equality_n, bool equality_n_plus_1);

std::vector<EqualityCase> enumerate_pn(const SearchConfig& config);
std::vector<EqualityCase> enumerate_hypersurface(const SearchConfig& config);
std::vector<EqualityCase> enumerate(const SearchConfig& config);

// One attempt of the remark-count search.
struct Regime {
  std::string label;  // "nef-default", "no-nef-widened-s", "nef-widened-n-x2", ...
  SearchConfig config;
  std::size_t count;
  bool floor_met;
};

struct FamilyClaim {
  std::size_t floor;
  std::vector<Regime> attempts;  // in the order tried; the last one is authoritative
  std::vector<EqualityCase> cases;
  std::size_t count() const { return cases.size(); }
  bool floor_met() const { return !attempts.empty() && attempts.back().floor_met; }
};

struct RemarkClaims {
  FamilyClaim pn;
  FamilyClaim hypersurface;
};

inline constexpr std::size_t kPnFloor = 18;
inline constexpr std::size_t kHypersurfaceFloor = 90;

SearchConfig default_pn_claim_config();
SearchConfig default_hypersurface_claim_config();

// Runs each family starting from its config, escalating when the floor is not
// reached: first without the nef filter and with a wider degree cap, then
// with n_max (and q_max) doubled under the original filter, up to three times.
RemarkClaims count_remark_claims(const SearchConfig& pn, const SearchConfig& hypersurface);
RemarkClaims count_remark_claims(unsigned workers = 1);

}  // namespace logchern
