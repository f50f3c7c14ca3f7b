#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "logchern/error.hpp"
#include "logchern/frontend.hpp"
#include "logchern/logchern.h"

using namespace logchern;

struct lc_model {
  AmbientModel model;
};

struct lc_pair {
  AmbientModel model;
  std::vector<Component> components;
};

struct lc_report {
  LogPair pair;
  BGReport report;
};

namespace {

thread_local std::string g_last_error;

lc_status fail(lc_status s, std::string msg) {
  g_last_error = std::move(msg);
  return s;
}

lc_status map_code(Errc code) {
  switch (code) {
    case Errc::model_mismatch: return LC_ERR_MODEL_MISMATCH;
    case Errc::grade_mismatch: return LC_ERR_GRADE_MISMATCH;
    case Errc::invalid_argument: return LC_ERR_INVALID_ARGUMENT;
    case Errc::parse_error: return LC_ERR_PARSE;
    case Errc::empty_range: return LC_ERR_EMPTY_RANGE;
    case Errc::internal: return LC_ERR_INTERNAL;
  }
  return LC_ERR_INTERNAL;
}

template <class F>
lc_status guarded(F&& f) {
  try {
    g_last_error.clear();
    f();
    return LC_OK;
  } catch (const Error& e) {
    return fail(map_code(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(LC_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(LC_ERR_INTERNAL, e.what());
  }
}

char* dup_string(const std::string& s) {
  auto* p = new char[s.size() + 1];
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

CycleClass divisor_from(const AmbientModel& model, const int64_t* coords, size_t n) {
  if (n != model.ref().basis_size(1))
    throw Error(Errc::invalid_argument, "expected " + std::to_string(model.ref().basis_size(1)) +
                                            " divisor coordinates on " + model.ref().display_name() + ", got " +
                                            std::to_string(n));
  std::vector<Rational> c;
  for (size_t i = 0; i < n; ++i) c.emplace_back(coords[i]);
  return model.divisor(c);
}

frontend::Format to_format(lc_format f) {
  return f == LC_FORMAT_RECORDS ? frontend::Format::records : frontend::Format::table;
}

#define LC_REQUIRE(ptr) \
  if (!(ptr)) return fail(LC_ERR_NULL_ARGUMENT, #ptr " is NULL")

}  // namespace

extern "C" {

const char* lc_version(void) { return LOGCHERN_VERSION; }

const char* lc_status_string(lc_status status) {
  switch (status) {
    case LC_OK: return "ok";
    case LC_ERR_NULL_ARGUMENT: return "null argument";
    case LC_ERR_INVALID_ARGUMENT: return "invalid argument";
    case LC_ERR_MODEL_MISMATCH: return "model mismatch";
    case LC_ERR_GRADE_MISMATCH: return "grade mismatch";
    case LC_ERR_PARSE: return "parse error";
    case LC_ERR_EMPTY_RANGE: return "empty range";
    case LC_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* lc_last_error(void) { return g_last_error.c_str(); }

void lc_string_free(char* s) { delete[] s; }

lc_status lc_model_projective_space(int n, lc_model** out) {
  LC_REQUIRE(out);
  return guarded([&] { *out = new lc_model{AmbientModel::projective_space(n)}; });
}

lc_status lc_model_hypersurface(int n, int64_t q, lc_model** out) {
  LC_REQUIRE(out);
  return guarded([&] { *out = new lc_model{AmbientModel::hypersurface(n, q)}; });
}

lc_status lc_model_hirzebruch(int64_t m, lc_model** out) {
  LC_REQUIRE(out);
  return guarded([&] { *out = new lc_model{AmbientModel::hirzebruch(m)}; });
}

void lc_model_free(lc_model* model) { delete model; }

lc_status lc_model_dim(const lc_model* model, int* out) {
  LC_REQUIRE(model);
  LC_REQUIRE(out);
  *out = model->model.dim();
  return LC_OK;
}

lc_status lc_model_is_nef(const lc_model* model, const int64_t* coords, size_t ncoords, int* out) {
  LC_REQUIRE(model);
  LC_REQUIRE(coords);
  LC_REQUIRE(out);
  return guarded([&] { *out = is_nef(model->model, divisor_from(model->model, coords, ncoords)) ? 1 : 0; });
}

lc_status lc_pair_create(const lc_model* model, lc_pair** out) {
  LC_REQUIRE(model);
  LC_REQUIRE(out);
  return guarded([&] { *out = new lc_pair{model->model, {}}; });
}

lc_status lc_pair_add_component(lc_pair* pair, const char* label, const int64_t* coords, size_t ncoords) {
  LC_REQUIRE(pair);
  LC_REQUIRE(label);
  LC_REQUIRE(coords);
  return guarded([&] {
    auto comps = pair->components;
    comps.push_back({label, divisor_from(pair->model, coords, ncoords)});
    LogPair check(pair->model, comps);  // validates before committing
    pair->components = std::move(comps);
  });
}

void lc_pair_free(lc_pair* pair) { delete pair; }

lc_status lc_report_compute(const lc_pair* pair, const int64_t* polarization, size_t ncoords, lc_report** out) {
  LC_REQUIRE(pair);
  LC_REQUIRE(out);
  return guarded([&] {
    LogPair lp(pair->model, pair->components);
    std::optional<CycleClass> h;
    if (polarization) h = divisor_from(pair->model, polarization, ncoords);
    auto rep = full_report(lp, h);
    *out = new lc_report{std::move(lp), std::move(rep)};
  });
}

void lc_report_free(lc_report* report) { delete report; }

lc_status lc_report_rank(const lc_report* report, int64_t* out) {
  LC_REQUIRE(report);
  LC_REQUIRE(out);
  *out = report->report.rank;
  return LC_OK;
}

lc_status lc_report_value(const lc_report* report, lc_report_field field, char** out) {
  LC_REQUIRE(report);
  LC_REQUIRE(out);
  const auto& r = report->report;
  std::string s;
  switch (field) {
    case LC_FIELD_C1_SQ: s = r.c1_sq.to_string(); break;
    case LC_FIELD_C2_EVAL: s = r.c2_eval.to_string(); break;
    case LC_FIELD_DISCRIMINANT: s = r.discriminant.to_string(); break;
    case LC_FIELD_LOG_C1: s = r.log_c1.to_string(); break;
    case LC_FIELD_LOG_C2: s = r.log_c2.to_string(); break;
    case LC_FIELD_POLARIZATION: s = r.polarization.to_string(); break;
    default: return fail(LC_ERR_INVALID_ARGUMENT, "unknown report field");
  }
  *out = dup_string(s);
  return LC_OK;
}

lc_status lc_report_flags(const lc_report* report, int* equality_n, int* equality_n_plus_1, int* minus_k_plus_d_nef) {
  LC_REQUIRE(report);
  const auto& r = report->report;
  if (equality_n) *equality_n = r.equality_n;
  if (equality_n_plus_1) *equality_n_plus_1 = r.equality_n_plus_1;
  if (minus_k_plus_d_nef) *minus_k_plus_d_nef = r.minus_k_plus_d_nef;
  return LC_OK;
}

lc_status lc_report_to_json(const lc_report* report, char** out) {
  LC_REQUIRE(report);
  LC_REQUIRE(out);
  return guarded([&] {
    const auto& r = report->report;
    frontend::Json j = frontend::Json::object();
    j["record"] = "report";
    j["version"] = std::string(frontend::version());
    j["model"] = report->pair.model().ref().display_name();
    j["rank"] = r.rank;
    j["polarization"] = frontend::class_to_json(r.polarization);
    j["log_c1"] = frontend::class_to_json(r.log_c1);
    j["log_c2"] = frontend::class_to_json(r.log_c2);
    j["c1_sq"] = r.c1_sq.to_string();
    j["c2_eval"] = r.c2_eval.to_string();
    j["discriminant"] = r.discriminant.to_string();
    j["equality_n"] = r.equality_n;
    j["equality_n_plus_1"] = r.equality_n_plus_1;
    j["minus_k_plus_d_nef"] = r.minus_k_plus_d_nef;
    *out = dup_string(j.dump());
  });
}

lc_status lc_report_document(const char* document, lc_format format, char** out) {
  LC_REQUIRE(document);
  LC_REQUIRE(out);
  return guarded([&] { *out = dup_string(frontend::run_report(document, to_format(format))); });
}

void lc_search_config_init(lc_search_config* config) {
  if (!config) return;
  *config = lc_search_config{LC_FAMILY_PN, 2, 2, LC_MODE_EITHER, 1, 1, 0, 2, 2, 1};
}

lc_status lc_enumerate(const lc_search_config* config, lc_format format, char** out, size_t* count) {
  LC_REQUIRE(config);
  LC_REQUIRE(out);
  return guarded([&] {
    SearchConfig cfg;
    cfg.family = config->family == LC_FAMILY_HYPERSURFACE ? Family::hypersurface : Family::pn;
    cfg.n_min = config->n_min;
    cfg.n_max = config->n_max;
    switch (config->mode) {
      case LC_MODE_N: cfg.mode = Mode::equality_n; break;
      case LC_MODE_N_PLUS_1: cfg.mode = Mode::equality_n_plus_1; break;
      default: cfg.mode = Mode::either; break;
    }
    cfg.require_nef = config->require_nef != 0;
    cfg.exclude_trivial = config->exclude_trivial != 0;
    if (config->s_max > 0) cfg.s_max = config->s_max;
    if (config->s_max < 0) throw Error(Errc::invalid_argument, "s_max must be positive");
    cfg.q_min = config->q_min;
    cfg.q_max = config->q_max;
    cfg.workers = config->workers;
    auto cases = enumerate(cfg);
    if (count) *count = cases.size();
    *out = dup_string(frontend::render_cases(cases, cfg, to_format(format)));
  });
}

lc_status lc_remark_claims(unsigned workers, lc_format format, char** out, size_t* pn_count,
                           size_t* hypersurface_count, int* floors_met) {
  LC_REQUIRE(out);
  return guarded([&] {
    auto claims = count_remark_claims(workers == 0 ? 1 : workers);
    if (pn_count) *pn_count = claims.pn.count();
    if (hypersurface_count) *hypersurface_count = claims.hypersurface.count();
    if (floors_met) *floors_met = claims.pn.floor_met() && claims.hypersurface.floor_met();
    *out = dup_string(frontend::render_claims(claims, to_format(format)));
  });
}

lc_status lc_verify_paper(lc_format format, char** out, int* all_passed) {
  LC_REQUIRE(out);
  return guarded([&] {
    auto fixtures = frontend::run_fixtures();
    bool ok = true;
    for (const auto& f : fixtures) ok = ok && f.passed;
    if (all_passed) *all_passed = ok;
    *out = dup_string(frontend::render_fixtures(fixtures, to_format(format)));
  });
}

}  // extern "C"
