#include "logchern/search.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "logchern/error.hpp"

namespace logchern {

std::string_view to_string(Family f) { return f == Family::pn ? "pn" : "hypersurface"; }

std::string_view to_string(Mode m) {
  switch (m) {
    case Mode::equality_n: return "n";
    case Mode::equality_n_plus_1: return "n1";
    case Mode::either: return "either";
  }
  return "?";
}

std::int64_t SearchConfig::effective_s_max(int n) const {
  if (s_max) return *s_max;
  return require_nef ? n + 1 : 3 * (static_cast<std::int64_t>(n) + 1);
}

void SearchConfig::validate() const {
  if (n_min < 2) throw Error(Errc::invalid_argument, "search: n_min must be >= 2");
  if (n_min > n_max)
    throw Error(Errc::empty_range, "search: empty n range " + std::to_string(n_min) + ".." + std::to_string(n_max));
  if (s_max && *s_max < 1) throw Error(Errc::invalid_argument, "search: s_max must be positive");
  if (workers < 1) throw Error(Errc::invalid_argument, "search: workers must be >= 1");
  if (family == Family::hypersurface) {
    if (q_min < 1) throw Error(Errc::invalid_argument, "search: q_min must be >= 1");
    if (q_min > q_max)
      throw Error(Errc::empty_range, "search: empty q range " + std::to_string(q_min) + ".." + std::to_string(q_max));
  }
}

bool mode_matches(Mode mode, bool equality_n, bool equality_n_plus_1) {
  switch (mode) {
    case Mode::equality_n: return equality_n;
    case Mode::equality_n_plus_1: return equality_n_plus_1;
    case Mode::either: return equality_n || equality_n_plus_1;
  }
  return false;
}

namespace {

using i128 = __int128;

// c2 - (r-1)/(2r) c1^2 == 0, cleared of denominators.
bool vanishes(i128 r, i128 c1, i128 c2) { return 2 * r * c2 == (r - 1) * c1 * c1; }

FastEval classify(i128 n, i128 c1, i128 c2) { return {c1 >= 0, vanishes(n, c1, c2), vanishes(n + 1, c1, c2)}; }

}  // namespace

FastEval fast_eval_pn(int n, std::span<const std::int64_t> partition) {
  i128 s = 0;
  i128 sq = 0;
  for (auto d : partition) {
    s += d;
    sq += static_cast<i128>(d) * d;
  }
  const i128 n1 = n + 1;
  i128 e2 = (s * s - sq) / 2;
  i128 c1 = n1 - s;
  i128 c2 = n1 * n / 2 - n1 * s + s * s - e2;
  return classify(n, c1, c2);
}

FastEval fast_eval_hypersurface(int n, std::int64_t q, std::int64_t l) {
  // Coefficients of h and h^2; the common factor q from the degree map cancels.
  const i128 a = static_cast<i128>(n) + 2 - q;
  const i128 L = l;
  i128 c1 = a - L;
  i128 tangent_c2 = (static_cast<i128>(n) + 2) * (n + 1) / 2 - static_cast<i128>(q) * (n + 2) + static_cast<i128>(q) * q;
  i128 c2 = tangent_c2 - a * L + L * L - L * (L - 1) / 2;
  return classify(n, c1, c2);
}

void visit_partitions(std::int64_t max_sum, const std::function<void(std::span<const std::int64_t>)>& visit) {
  std::vector<std::int64_t> parts;
  // Extend the current prefix by parts no larger than its last part.
  std::function<void(std::int64_t, std::int64_t)> rec = [&](std::int64_t remaining, std::int64_t cap) {
    visit(parts);
    for (std::int64_t d = std::min(cap, remaining); d >= 1; --d) {
      parts.push_back(d);
      rec(remaining - d, d);
      parts.pop_back();
    }
  };
  if (max_sum < 0) return;
  rec(max_sum, max_sum);
}

namespace {

bool partition_less(const EqualityCase& a, const EqualityCase& b) {
  if (a.n != b.n) return a.n < b.n;
  if (a.q != b.q) return a.q < b.q;
  if (a.partition.size() != b.partition.size()) return a.partition.size() < b.partition.size();
  return a.partition < b.partition;
}

EqualityCase verified_case(Family family, const AmbientModel& model, std::vector<std::int64_t> partition,
                           const FastEval& fast) {
  auto report = full_report(make_degree_pair(model, partition));
  if (report.equality_n != fast.equality_n || report.equality_n_plus_1 != fast.equality_n_plus_1 ||
      report.minus_k_plus_d_nef != fast.nef)
    throw Error(Errc::internal, "closed-form scan and Chow evaluation disagree on " + model.ref().display_name());
  return EqualityCase{family, model.dim(), model.ref().q, std::move(partition), report.equality_n,
                      report.equality_n_plus_1, report.minus_k_plus_d_nef, std::move(report)};
}

std::vector<EqualityCase> scan_pn(const SearchConfig& cfg, int n) {
  std::vector<EqualityCase> out;
  auto model = AmbientModel::projective_space(n);
  visit_partitions(cfg.effective_s_max(n), [&](std::span<const std::int64_t> p) {
    if (cfg.exclude_trivial && (p.empty() || (p.size() == 1 && p[0] == 1))) return;
    auto fast = fast_eval_pn(n, p);
    if (cfg.require_nef && !fast.nef) return;
    if (!mode_matches(cfg.mode, fast.equality_n, fast.equality_n_plus_1)) return;
    out.push_back(verified_case(Family::pn, model, {p.begin(), p.end()}, fast));
  });
  return out;
}

std::vector<EqualityCase> scan_hypersurface(const SearchConfig& cfg, int n) {
  std::vector<EqualityCase> out;
  for (auto q = cfg.q_min; q <= cfg.q_max; ++q) {
    auto model = AmbientModel::hypersurface(n, q);
    for (std::int64_t l = cfg.exclude_trivial ? 1 : 0; l <= cfg.effective_s_max(n); ++l) {
      auto fast = fast_eval_hypersurface(n, q, l);
      if (cfg.require_nef && !fast.nef) continue;
      if (!mode_matches(cfg.mode, fast.equality_n, fast.equality_n_plus_1)) continue;
      out.push_back(verified_case(Family::hypersurface, model, std::vector<std::int64_t>(l, 1), fast));
    }
  }
  return out;
}

// Slices the box by n; each worker owns whole slices, merged in n order.
std::vector<EqualityCase> run_sliced(const SearchConfig& cfg,
                                     std::vector<EqualityCase> (*scan)(const SearchConfig&, int)) {
  cfg.validate();
  const auto slices = static_cast<std::size_t>(cfg.n_max - cfg.n_min + 1);
  std::vector<std::vector<EqualityCase>> results(slices);
  std::vector<std::exception_ptr> errors(slices);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < slices; i = next++) {
      try {
        results[i] = scan(cfg, cfg.n_min + static_cast<int>(i));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  unsigned threads = std::min<std::size_t>(cfg.workers, slices);
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<EqualityCase> out;
  for (auto& r : results) std::move(r.begin(), r.end(), std::back_inserter(out));
  std::stable_sort(out.begin(), out.end(), partition_less);
  return out;
}

}  // namespace

std::vector<EqualityCase> enumerate_pn(const SearchConfig& config) {
  if (config.family != Family::pn) throw Error(Errc::invalid_argument, "enumerate_pn: family must be pn");
  return run_sliced(config, scan_pn);
}

std::vector<EqualityCase> enumerate_hypersurface(const SearchConfig& config) {
  if (config.family != Family::hypersurface)
    throw Error(Errc::invalid_argument, "enumerate_hypersurface: family must be hypersurface");
  return run_sliced(config, scan_hypersurface);
}

std::vector<EqualityCase> enumerate(const SearchConfig& config) {
  return config.family == Family::pn ? enumerate_pn(config) : enumerate_hypersurface(config);
}

SearchConfig default_pn_claim_config() {
  SearchConfig c;
  c.family = Family::pn;
  c.n_min = 2;
  c.n_max = 30;
  c.mode = Mode::either;
  c.require_nef = true;
  c.exclude_trivial = true;
  return c;
}

SearchConfig default_hypersurface_claim_config() {
  SearchConfig c;
  c.family = Family::hypersurface;
  c.n_min = 2;
  c.n_max = 40;
  c.q_min = 2;
  c.q_max = 40;
  c.mode = Mode::either;
  c.require_nef = true;
  c.exclude_trivial = true;
  return c;
}

namespace {

constexpr int kMaxDoublings = 3;
// Extra total degree allowed on P^n once the nef cap is lifted; the partition
// count grows too fast for the 3(n+1) default at n = 30.
constexpr std::int64_t kPnWidenedSlack = 8;

FamilyClaim claim_family(const SearchConfig& base, std::size_t floor) {
  FamilyClaim claim{floor, {}, {}};
  auto attempt = [&](std::string label, SearchConfig cfg) {
    auto cases = enumerate(cfg);
    bool met = cases.size() >= floor;
    claim.attempts.push_back({std::move(label), cfg, cases.size(), met});
    claim.cases = std::move(cases);
    return met;
  };

  if (attempt("nef-default", base)) return claim;

  auto widened = base;
  widened.require_nef = false;
  if (base.family == Family::pn) {
    // Per-n caps are expressed through s_max only when uniform; use the
    // largest n so every slice gets at least n+1+slack.
    widened.s_max = static_cast<std::int64_t>(base.n_max) + 1 + kPnWidenedSlack;
  } else {
    widened.s_max = 3 * (static_cast<std::int64_t>(base.n_max) + 1);
  }
  if (attempt("no-nef-widened-s", widened)) return claim;

  auto grown = base;
  for (int i = 1; i <= kMaxDoublings; ++i) {
    grown.n_max *= 2;
    if (grown.family == Family::hypersurface) grown.q_max *= 2;
    if (attempt("nef-widened-n-x" + std::to_string(1 << i), grown)) return claim;
  }
  return claim;
}

}  // namespace

RemarkClaims count_remark_claims(const SearchConfig& pn, const SearchConfig& hypersurface) {
  return {claim_family(pn, kPnFloor), claim_family(hypersurface, kHypersurfaceFloor)};
}

RemarkClaims count_remark_claims(unsigned workers) {
  auto pn = default_pn_claim_config();
  auto hyp = default_hypersurface_claim_config();
  pn.workers = hyp.workers = workers;
  return count_remark_claims(pn, hyp);
}

}  // namespace logchern
