#include "logchern/frontend.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <thread>

#include "logchern/error.hpp"

#ifndef LOGCHERN_VERSION
#define LOGCHERN_VERSION "0.0.0"
#endif

namespace logchern::frontend {

std::string_view version() { return LOGCHERN_VERSION; }

// ---------------------------------------------------------------------------
// Input documents

namespace {

[[noreturn]] void parse_fail(const std::string& path, const std::string& what) {
  throw Error(Errc::parse_error, (path.empty() ? std::string("<document>") : path) + ": " + what);
}

std::string join_path(const std::string& base, const std::string& key) {
  return base.empty() ? key : base + "." + key;
}

std::int64_t require_int(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) parse_fail(path, "expected an integer");
  return j.get<std::int64_t>();
}

void reject_unknown(const Json& obj, const std::string& path, std::initializer_list<std::string_view> allowed) {
  for (const auto& [key, _] : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) parse_fail(join_path(path, key), "unknown key");
  }
}

ModelKind parse_kind(const Json& j, const std::string& path) {
  if (!j.is_string()) parse_fail(path, "expected a string");
  auto s = j.get<std::string>();
  if (s == "projective_space") return ModelKind::projective_space;
  if (s == "hypersurface") return ModelKind::hypersurface;
  if (s == "hirzebruch") return ModelKind::hirzebruch;
  parse_fail(path, "unknown ambient kind '" + s + "'");
}

std::vector<std::string_view> generators_of(ModelKind kind) {
  switch (kind) {
    case ModelKind::projective_space: return {"H"};
    case ModelKind::hypersurface: return {"h"};
    case ModelKind::hirzebruch: return {"C0", "f"};
  }
  return {};
}

ClassSpec parse_class_spec(const Json& j, ModelKind kind, const std::string& path) {
  if (!j.is_object()) parse_fail(path, "expected an object mapping generator names to integers");
  auto gens = generators_of(kind);
  ClassSpec out;
  for (const auto& [key, value] : j.items()) {
    auto kp = join_path(path, key);
    if (std::find(gens.begin(), gens.end(), key) == gens.end())
      parse_fail(kp, "generator not available on " + std::string(to_string(kind)));
    out.emplace_back(key, require_int(value, kp));
  }
  return out;
}

std::vector<Rational> coords_of(const ClassSpec& spec, ModelKind kind) {
  auto gens = generators_of(kind);
  std::vector<Rational> coords(gens.size());
  for (const auto& [name, v] : spec) {
    auto it = std::find(gens.begin(), gens.end(), name);
    coords[static_cast<std::size_t>(it - gens.begin())] += Rational(v);
  }
  return coords;
}

}  // namespace

PairDescriptor parse_descriptor(const Json& j, const std::string& path) {
  if (!j.is_object()) parse_fail(path, "expected an object with 'ambient' and 'divisors'");
  reject_unknown(j, path, {"ambient", "divisors", "polarization"});
  PairDescriptor d;

  auto ap = join_path(path, "ambient");
  if (!j.contains("ambient")) parse_fail(ap, "missing");
  const auto& amb = j.at("ambient");
  if (!amb.is_object()) parse_fail(ap, "expected an object");
  if (!amb.contains("kind")) parse_fail(join_path(ap, "kind"), "missing");
  d.kind = parse_kind(amb.at("kind"), join_path(ap, "kind"));
  std::vector<std::string_view> needed;
  switch (d.kind) {
    case ModelKind::projective_space: needed = {"n"}; break;
    case ModelKind::hypersurface: needed = {"n", "q"}; break;
    case ModelKind::hirzebruch: needed = {"m"}; break;
  }
  for (const auto& [key, value] : amb.items()) {
    if (key == "kind") continue;
    auto kp = join_path(ap, key);
    if (std::find(needed.begin(), needed.end(), key) == needed.end())
      parse_fail(kp, "not a parameter of " + std::string(to_string(d.kind)));
    auto v = require_int(value, kp);
    if (key == "n") d.n = v;
    if (key == "q") d.q = v;
    if (key == "m") d.m = v;
  }
  for (auto key : needed) {
    if (!amb.contains(std::string(key))) parse_fail(join_path(ap, std::string(key)), "missing");
  }

  auto dp = join_path(path, "divisors");
  if (!j.contains("divisors")) parse_fail(dp, "missing");
  const auto& divs = j.at("divisors");
  if (!divs.is_array()) parse_fail(dp, "expected an array");
  for (std::size_t i = 0; i < divs.size(); ++i) {
    auto ip = dp + "[" + std::to_string(i) + "]";
    const auto& e = divs[i];
    if (!e.is_object()) parse_fail(ip, "expected an object with 'label' and 'class'");
    reject_unknown(e, ip, {"label", "class"});
    if (!e.contains("label") || !e.at("label").is_string()) parse_fail(join_path(ip, "label"), "expected a string");
    if (!e.contains("class")) parse_fail(join_path(ip, "class"), "missing");
    d.divisors.push_back({e.at("label").get<std::string>(), parse_class_spec(e.at("class"), d.kind, join_path(ip, "class"))});
  }

  if (j.contains("polarization"))
    d.polarization = parse_class_spec(j.at("polarization"), d.kind, join_path(path, "polarization"));
  return d;
}

std::vector<PairDescriptor> parse_document(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::parse_error, std::string("<document>: ") + e.what());
  }
  std::vector<PairDescriptor> out;
  if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(parse_descriptor(j[i], "[" + std::to_string(i) + "]"));
  } else {
    out.push_back(parse_descriptor(j));
  }
  return out;
}

Json to_json(const PairDescriptor& d) {
  Json amb = Json::object();
  amb["kind"] = std::string(to_string(d.kind));
  if (d.n) amb["n"] = *d.n;
  if (d.q) amb["q"] = *d.q;
  if (d.m) amb["m"] = *d.m;
  auto spec_json = [](const ClassSpec& s) {
    Json c = Json::object();
    for (const auto& [k, v] : s) c[k] = v;
    return c;
  };
  Json divs = Json::array();
  for (const auto& div : d.divisors) divs.push_back(Json{{"label", div.label}, {"class", spec_json(div.cls)}});
  Json out = Json::object();
  out["ambient"] = amb;
  out["divisors"] = divs;
  if (d.polarization) out["polarization"] = spec_json(*d.polarization);
  return out;
}

namespace {

int narrow_dim(std::int64_t v, const char* key) {
  if (v > 1'000'000 || v < -1'000'000) throw Error(Errc::invalid_argument, std::string("ambient.") + key + ": out of range");
  return static_cast<int>(v);
}

}  // namespace

AmbientModel build_model(const PairDescriptor& d) {
  switch (d.kind) {
    case ModelKind::projective_space: return AmbientModel::projective_space(narrow_dim(d.n.value_or(0), "n"));
    case ModelKind::hypersurface: return AmbientModel::hypersurface(narrow_dim(d.n.value_or(0), "n"), d.q.value_or(0));
    case ModelKind::hirzebruch: return AmbientModel::hirzebruch(d.m.value_or(0));
  }
  throw Error(Errc::internal, "unknown ambient kind");
}

LogPair build_pair(const PairDescriptor& d) {
  auto model = build_model(d);
  std::vector<Component> comps;
  for (const auto& div : d.divisors) comps.push_back({div.label, model.divisor(coords_of(div.cls, d.kind))});
  return LogPair(model, std::move(comps));
}

std::optional<CycleClass> build_polarization(const PairDescriptor& d) {
  if (!d.polarization) return std::nullopt;
  auto model = build_model(d);
  auto h = model.divisor(coords_of(*d.polarization, d.kind));
  // Ample: strictly positive against every Mori cone generator.
  bool ample = model.kind() == ModelKind::hirzebruch
                   ? degree(h * model.generator("f")).sign() > 0 && degree(h * model.generator("C0")).sign() > 0
                   : h.coeff(0).sign() > 0;
  if (!ample) throw Error(Errc::invalid_argument, "polarization: " + h.to_string() + " is not ample");
  return h;
}

std::string divisor_display(const AmbientModel& model, const CycleClass& cls) {
  auto text = cls.to_string();
  if (model.kind() == ModelKind::hirzebruch && cls == model.divisor({1, model.ref().m})) return text + " = C_inf";
  return text;
}

// ---------------------------------------------------------------------------
// Report records

Json class_to_json(const CycleClass& c) {
  Json out = Json::object();
  auto names = c.model().basis_names(c.grade());
  for (std::size_t i = 0; i < names.size(); ++i) out[names[i]] = c.coeff(i).to_string();
  return out;
}

CycleClass class_from_json(const ModelRef& model, int grade, const Json& j, const std::string& path) {
  if (!j.is_object()) parse_fail(path, "expected an object");
  auto names = model.basis_names(grade);
  std::vector<Rational> coeffs(names.size());
  for (const auto& [key, value] : j.items()) {
    auto it = std::find(names.begin(), names.end(), key);
    if (it == names.end()) parse_fail(join_path(path, key), "not a basis element");
    if (!value.is_string()) parse_fail(join_path(path, key), "expected a rational string");
    coeffs[static_cast<std::size_t>(it - names.begin())] = Rational::parse(value.get<std::string>());
  }
  return CycleClass(model, grade, std::move(coeffs));
}

ReportRecord make_report_record(const PairDescriptor& d) {
  auto report = full_report(build_pair(d), build_polarization(d));
  return ReportRecord{std::string(version()), d, std::move(report)};
}

Json to_json(const ReportRecord& r) {
  auto pair = build_pair(r.input);
  const auto& model = pair.model();
  Json display = Json::array();
  for (const auto& c : pair.components()) display.push_back(c.label + ": " + divisor_display(model, c.cls));
  const auto& b = r.report;
  Json out = Json::object();
  out["record"] = "report";
  out["version"] = r.version;
  out["input"] = to_json(r.input);
  out["model"] = model.ref().display_name();
  out["divisor_display"] = display;
  out["rank"] = b.rank;
  out["polarization"] = class_to_json(b.polarization);
  out["log_c1"] = class_to_json(b.log_c1);
  out["log_c2"] = class_to_json(b.log_c2);
  out["c1_sq"] = b.c1_sq.to_string();
  out["c2_eval"] = b.c2_eval.to_string();
  out["discriminant"] = b.discriminant.to_string();
  out["equality_n"] = b.equality_n;
  out["equality_n_plus_1"] = b.equality_n_plus_1;
  out["minus_k_plus_d_nef"] = b.minus_k_plus_d_nef;
  return out;
}

ReportRecord report_record_from_json(const Json& j) {
  if (!j.is_object()) parse_fail("", "expected a report record object");
  auto get = [&](const char* key) -> const Json& {
    if (!j.contains(key)) parse_fail(key, "missing");
    return j.at(key);
  };
  auto get_bool = [&](const char* key) {
    const auto& v = get(key);
    if (!v.is_boolean()) parse_fail(key, "expected a boolean");
    return v.get<bool>();
  };
  auto get_rational = [&](const char* key) {
    const auto& v = get(key);
    if (!v.is_string()) parse_fail(key, "expected a rational string");
    return Rational::parse(v.get<std::string>());
  };
  if (!get("version").is_string()) parse_fail("version", "expected a string");
  auto input = parse_descriptor(get("input"), "input");
  auto model = build_model(input).ref();
  BGReport rep{require_int(get("rank"), "rank"),
               get_rational("c1_sq"),
               get_rational("c2_eval"),
               get_rational("discriminant"),
               get_bool("equality_n"),
               get_bool("equality_n_plus_1"),
               get_bool("minus_k_plus_d_nef"),
               class_from_json(model, 1, get("polarization"), "polarization"),
               class_from_json(model, 1, get("log_c1"), "log_c1"),
               class_from_json(model, 2, get("log_c2"), "log_c2")};
  return ReportRecord{get("version").get<std::string>(), std::move(input), std::move(rep)};
}

namespace {

const char* yes_no(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string render_report_table(const ReportRecord& r) {
  auto pair = build_pair(r.input);
  const auto& model = pair.model();
  const auto& b = r.report;
  std::ostringstream os;
  os << "pair                 " << model.ref().display_name();
  if (pair.components().empty()) os << ", D = 0";
  os << "\n";
  for (const auto& c : pair.components()) os << "  component          " << c.label << " ~ " << divisor_display(model, c.cls) << "\n";
  os << "rank                 " << b.rank << "\n"
     << "polarization         " << b.polarization.to_string() << "\n"
     << "log c1               " << b.log_c1.to_string() << "\n"
     << "log c2               " << b.log_c2.to_string() << "\n"
     << "c1^2.H^(n-2)         " << b.c1_sq.to_string() << "\n"
     << "c2.H^(n-2)           " << b.c2_eval.to_string() << "\n"
     << "discriminant         " << b.discriminant.to_string() << "\n"
     << "equality (rank n)    " << yes_no(b.equality_n) << "\n"
     << "equality (rank n+1)  " << yes_no(b.equality_n_plus_1) << "\n"
     << "-(K+D) nef           " << yes_no(b.minus_k_plus_d_nef) << "\n";
  return os.str();
}

std::string run_report(std::string_view document, Format format) {
  auto descriptors = parse_document(document);
  std::string out;
  for (std::size_t i = 0; i < descriptors.size(); ++i) {
    auto rec = make_report_record(descriptors[i]);
    if (format == Format::records) {
      out += to_json(rec).dump() + "\n";
    } else {
      if (i) out += "\n";
      out += render_report_table(rec);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Enumeration output

Json bounds_to_json(const SearchConfig& cfg) {
  Json b = Json::object();
  b["family"] = std::string(to_string(cfg.family));
  b["mode"] = std::string(to_string(cfg.mode));
  b["n"] = Json::array({cfg.n_min, cfg.n_max});
  if (cfg.family == Family::hypersurface) b["q"] = Json::array({cfg.q_min, cfg.q_max});
  if (cfg.s_max)
    b["s_max"] = *cfg.s_max;
  else
    b["s_max"] = cfg.require_nef ? "n+1" : "3(n+1)";
  b["require_nef"] = cfg.require_nef;
  b["exclude_trivial"] = cfg.exclude_trivial;
  return b;
}

namespace {

Json satisfied_json(const EqualityCase& c) {
  Json s = Json::array();
  if (c.satisfies_n) s.push_back("n");
  if (c.satisfies_n_plus_1) s.push_back("n+1");
  return s;
}

std::string partition_text(const std::vector<std::int64_t>& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + ")";
}

std::string bounds_text(const SearchConfig& cfg) {
  std::ostringstream os;
  os << "family=" << to_string(cfg.family) << " mode=" << to_string(cfg.mode) << " n=" << cfg.n_min << ".." << cfg.n_max;
  if (cfg.family == Family::hypersurface) os << " q=" << cfg.q_min << ".." << cfg.q_max;
  os << " s_max=";
  if (cfg.s_max)
    os << *cfg.s_max;
  else
    os << (cfg.require_nef ? "n+1" : "3(n+1)");
  os << " nef=" << (cfg.require_nef ? "required" : "any") << " trivial=" << (cfg.exclude_trivial ? "excluded" : "kept");
  return os.str();
}

}  // namespace

Json case_to_json(const EqualityCase& c, const SearchConfig& cfg) {
  Json out = Json::object();
  out["record"] = "case";
  out["version"] = std::string(version());
  out["family"] = std::string(to_string(c.family));
  out["n"] = c.n;
  out["q"] = c.q;
  out["l"] = c.length();
  out["partition"] = c.partition;
  out["satisfies"] = satisfied_json(c);
  out["nef"] = c.nef;
  out["c1_sq"] = c.report.c1_sq.to_string();
  out["c2_eval"] = c.report.c2_eval.to_string();
  out["discriminant"] = c.report.discriminant.to_string();
  out["equality_n"] = c.report.equality_n;
  out["equality_n_plus_1"] = c.report.equality_n_plus_1;
  out["minus_k_plus_d_nef"] = c.report.minus_k_plus_d_nef;
  out["bounds"] = bounds_to_json(cfg);
  return out;
}

std::string render_cases(const std::vector<EqualityCase>& cases, const SearchConfig& cfg, Format format) {
  std::ostringstream os;
  if (format == Format::records) {
    for (const auto& c : cases) os << case_to_json(c, cfg).dump() << "\n";
    Json summary = Json::object();
    summary["record"] = "summary";
    summary["version"] = std::string(version());
    summary["count"] = cases.size();
    summary["bounds"] = bounds_to_json(cfg);
    os << summary.dump() << "\n";
    return os.str();
  }
  os << "  n    q    l  partition              satisfies  nef    c1^2    c2     \n";
  for (const auto& c : cases) {
    std::string sat = c.satisfies_n && c.satisfies_n_plus_1 ? "n, n+1" : (c.satisfies_n ? "n" : "n+1");
    char line[256];
    std::snprintf(line, sizeof line, "%3d %4lld %4zu  %-22s %-10s %-6s %-7s %s\n", c.n, static_cast<long long>(c.q),
                  c.length(), partition_text(c.partition).c_str(), sat.c_str(), yes_no(c.nef),
                  c.report.c1_sq.to_string().c_str(), c.report.c2_eval.to_string().c_str());
    os << line;
  }
  os << "# " << cases.size() << " cases; " << bounds_text(cfg) << "\n";
  return os.str();
}

std::string render_claims(const RemarkClaims& claims, Format format) {
  std::ostringstream os;
  auto family = [&](const char* name, const FamilyClaim& fc) {
    for (const auto& a : fc.attempts) {
      if (format == Format::records) {
        Json r = Json::object();
        r["record"] = "regime";
        r["version"] = std::string(version());
        r["family"] = name;
        r["regime"] = a.label;
        r["count"] = a.count;
        r["floor"] = fc.floor;
        r["floor_met"] = a.floor_met;
        r["bounds"] = bounds_to_json(a.config);
        os << r.dump() << "\n";
      } else {
        os << name << "  regime " << a.label << ": " << a.count << " cases (floor " << fc.floor << ", "
           << (a.floor_met ? "met" : "not met") << ")  " << bounds_text(a.config) << "\n";
      }
    }
  };
  family("pn", claims.pn);
  family("hypersurface", claims.hypersurface);
  if (format == Format::records) {
    Json r = Json::object();
    r["record"] = "claims";
    r["version"] = std::string(version());
    r["pn_count"] = claims.pn.count();
    r["pn_floor"] = claims.pn.floor;
    r["pn_regime"] = claims.pn.attempts.back().label;
    r["hypersurface_count"] = claims.hypersurface.count();
    r["hypersurface_floor"] = claims.hypersurface.floor;
    r["hypersurface_regime"] = claims.hypersurface.attempts.back().label;
    r["floors_met"] = claims.pn.floor_met() && claims.hypersurface.floor_met();
    os << r.dump() << "\n";
  } else {
    os << "# pn: " << claims.pn.count() << " cases with D != 0, D != H (at least " << claims.pn.floor << ": "
       << (claims.pn.floor_met() ? "yes" : "no") << ", regime " << claims.pn.attempts.back().label << ")\n"
       << "# hypersurface: " << claims.hypersurface.count() << " cases with q >= 2, degree-1 components (at least "
       << claims.hypersurface.floor << ": " << (claims.hypersurface.floor_met() ? "yes" : "no") << ", regime "
       << claims.hypersurface.attempts.back().label << ")\n";
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Published-value fixtures

namespace {

struct FixtureBuilder {
  std::vector<Fixture> out;

  void single(std::string name, std::string claim, std::string expected, const std::function<std::string()>& compute) {
    std::string got;
    try {
      got = compute();
    } catch (const std::exception& e) {
      got = std::string("error: ") + e.what();
    }
    bool ok = got == expected;
    out.push_back({std::move(name), std::move(claim), std::move(expected), std::move(got), ok});
  }

  // Checks expected(i) == computed(i) for every i in [lo, hi].
  void range(std::string name, std::string claim, std::string expected_label, const char* var, int lo, int hi,
             const std::function<std::string(int)>& expected, const std::function<std::string(int)>& computed) {
    std::string got = expected_label + " for " + var + "=" + std::to_string(lo) + ".." + std::to_string(hi);
    bool ok = true;
    for (int i = lo; i <= hi && ok; ++i) {
      std::string e;
      std::string c;
      try {
        e = expected(i);
        c = computed(i);
      } catch (const std::exception& ex) {
        c = std::string("error: ") + ex.what();
      }
      if (e != c) {
        ok = false;
        got = std::string(var) + "=" + std::to_string(i) + ": " + c + " (expected " + e + ")";
      }
    }
    out.push_back({std::move(name), std::move(claim),
                   expected_label + " for " + var + "=" + std::to_string(lo) + ".." + std::to_string(hi), got, ok});
  }
};

LogPair hyperplane_pair(int n) { return make_degree_pair(AmbientModel::projective_space(n), {1}); }

LogPair hirzebruch_pair(std::int64_t m) {
  auto f = AmbientModel::hirzebruch(m);
  return LogPair(f, {{"C0", f.divisor({1, 0})}, {"Cinf", f.divisor({1, m})}});
}

std::string str(const Rational& r) { return r.to_string(); }
std::string str(bool b) { return b ? "true" : "false"; }

}  // namespace

std::vector<Fixture> run_fixtures() {
  FixtureBuilder fx;
  const std::string claim_pn = "T_{P^n}(-log H) attains Bogomolov-Gieseker equality and -(K+H) is nef";
  const std::string claim_fm = "T_{F_m}(-log(C0+C_inf)) attains Bogomolov-Gieseker equality and -(K+D) = 2f is nef";

  fx.range("P^n log c1 = nH", claim_pn, "nH", "n", 2, 12,
           [](int n) { return AmbientModel::projective_space(n).divisor({n}).to_string(); },
           [](int n) { return log_c1(hyperplane_pair(n)).to_string(); });
  fx.range("P^n log c2 = n(n-1)/2 H^2", claim_pn, "n(n-1)/2 H^2", "n", 2, 12,
           [](int n) {
             auto ref = AmbientModel::projective_space(n).ref();
             return CycleClass(ref, 2, {Rational(n * (n - 1) / 2)}).to_string();
           },
           [](int n) { return log_c2(hyperplane_pair(n)).to_string(); });
  fx.range("P^n log H rank-n discriminant = 0", claim_pn, "0", "n", 2, 12, [](int) { return std::string("0"); },
           [](int n) { return str(full_report(hyperplane_pair(n)).discriminant); });
  fx.range("P^n -(K+H) nef", claim_pn, "true", "n", 2, 12, [](int) { return std::string("true"); },
           [](int n) { return str(full_report(hyperplane_pair(n)).minus_k_plus_d_nef); });

  fx.range("F_m c2(T) = 4", claim_fm, "4pt", "m", 1, 50, [](int) { return std::string("4pt"); },
           [](int m) { return tangent_chern(AmbientModel::hirzebruch(m)).c2.to_string(); });
  fx.range("F_m c1(T) = 2C0+(m+2)f", claim_fm, "2C0+(m+2)f", "m", 1, 50,
           [](int m) { return "2C0+" + std::to_string(m + 2) + "f"; },
           [](int m) { return tangent_chern(AmbientModel::hirzebruch(m)).c1.to_string(); });
  fx.range("F_m log c1 = 2f", claim_fm, "2f", "m", 1, 50, [](int) { return std::string("2f"); },
           [](int m) { return log_c1(hirzebruch_pair(m)).to_string(); });
  fx.range("F_m c2 log = 0", claim_fm, "0", "m", 1, 50, [](int) { return std::string("0"); },
           [](int m) { return log_c2(hirzebruch_pair(m)).to_string(); });
  fx.range("F_m (2f)^2 = 0", claim_fm, "0", "m", 1, 50, [](int) { return std::string("0"); },
           [](int m) {
             auto c1 = log_c1(hirzebruch_pair(m));
             return str(degree(c1 * c1));
           });
  fx.range("F_m discriminant rank 2 and rank 3 = 0", claim_fm, "0,0", "m", 1, 50,
           [](int) { return std::string("0,0"); },
           [](int m) {
             auto p = hirzebruch_pair(m);
             auto h = default_polarization(p.model());
             auto ext = extension_chern(p);
             ChernData tangent(2, ext.c1, ext.c2);
             return str(discriminant(tangent, h)) + "," + str(discriminant(ext, h));
           });
  fx.range("F_m -(K+D) = 2f nef", claim_fm, "2f nef", "m", 1, 50, [](int) { return std::string("2f nef"); },
           [](int m) {
             auto p = hirzebruch_pair(m);
             auto a = neg(canonical_class(p.model())) - p.boundary();
             return a.to_string() + (is_nef(p.model(), a) ? " nef" : " not nef");
           });
  fx.range("(K+D).C0 = -2 on F_m", "only R+[C0] is (K+D)-negative: (K+D).C0 = -2, (K+D).f = 0", "-2,0", "m", 1, 50,
           [](int) { return std::string("-2,0"); },
           [](int m) {
             auto p = hirzebruch_pair(m);
             auto kd = canonical_class(p.model()) + p.boundary();
             return str(degree(kd * p.model().generator("C0"))) + "," + str(degree(kd * p.model().generator("f")));
           });

  const std::string table = "intersection numbers on F_m: C0^2 = -m, C0.f = 1, f^2 = 0";
  fx.range("F_m intersection matrix", table, "-m,1,1,0", "m", 1, 50,
           [](int m) { return std::to_string(-m) + ",1,1,0"; },
           [](int m) {
             auto f = AmbientModel::hirzebruch(m);
             auto c0 = f.generator("C0");
             auto fib = f.generator("f");
             return str(degree(c0 * c0)) + "," + str(degree(c0 * fib)) + "," + str(degree(fib * c0)) + "," +
                    str(degree(fib * fib));
           });
  fx.range("F_m (2C0+mf).2f = 4", "c2(T_{F_m}) = c1(relative tangent) c1(pulled-back base tangent) = 4", "4", "m",
           1, 50, [](int) { return std::string("4"); },
           [](int m) {
             auto f = AmbientModel::hirzebruch(m);
             return str(degree(f.divisor({2, m}) * f.divisor({0, 2})));
           });
  fx.range("F_m Mori generators: f nef, C0 not nef", "closed cone of curves of F_m spanned by [f] and [C0]",
           "true,false", "m", 1, 50, [](int) { return std::string("true,false"); },
           [](int m) {
             auto f = AmbientModel::hirzebruch(m);
             return str(is_nef(f, f.generator("f"))) + "," + str(is_nef(f, f.generator("C0")));
           });

  const std::string slope_claim = "slope of Omega^r on P^n is -r(n+1)/n; slope of Omega^1(log H) is -1";
  fx.range("mu(Omega^r) = -r(n+1)/n grid", slope_claim, "-r(n+1)/n for r=1..n", "n", 2, 12,
           [](int n) {
             std::string s;
             for (int r = 1; r <= n; ++r) s += Rational(-r * (n + 1), n).to_string() + ";";
             return s;
           },
           [](int n) {
             std::string s;
             for (int r = 1; r <= n; ++r) s += wedge_cotangent_slope(n, r).to_string() + ";";
             return s;
           });
  fx.range("mu(Omega^1(log H)) = -1", slope_claim, "-1", "n", 2, 12, [](int) { return std::string("-1"); },
           [](int n) {
             auto p = hyperplane_pair(n);
             return str(slope(p.model(), neg(log_c1(p)), n, default_polarization(p.model())));
           });

  const std::string remark = "explicit equality examples on P^n and on hypersurfaces";
  fx.single("P^7 (2,1,1) rank n+1 equality", remark, "0", [] {
    auto p = make_degree_pair(AmbientModel::projective_space(7), {2, 1, 1});
    auto r = full_report(p);
    return r.equality_n_plus_1 ? std::string("0") : str(r.c2_eval - bg_coefficient(8) * r.c1_sq);
  });
  fx.single("P^8 (2,1,1,1) rank n equality", remark, "0", [] {
    return str(full_report(make_degree_pair(AmbientModel::projective_space(8), {2, 1, 1, 1})).discriminant);
  });
  fx.single("hypersurface (n,q,l)=(7,2,3) rank n+1 equality", remark, "0", [] {
    auto r = full_report(make_degree_pair(AmbientModel::hypersurface(7, 2), {1, 1, 1}));
    return str(r.c2_eval - bg_coefficient(8) * r.c1_sq);
  });
  fx.single("hypersurface (n,q,l)=(8,2,4) rank n equality", remark, "0", [] {
    return str(full_report(make_degree_pair(AmbientModel::hypersurface(8, 2), {1, 1, 1, 1})).discriminant);
  });

  auto claims = count_remark_claims(std::max(1u, std::thread::hardware_concurrency()));
  fx.single("at least 18 P^n equality cases (D != 0, D != H)", "at least 18 examples on P^n",
            ">= 18", [&] { return claims.pn.count() >= kPnFloor ? std::string(">= 18") : std::to_string(claims.pn.count()); });
  fx.single("at least 90 hypersurface equality cases", "at least 90 examples on hypersurfaces with q >= 2",
            ">= 90", [&] {
              return claims.hypersurface.count() >= kHypersurfaceFloor ? std::string(">= 90")
                                                                         : std::to_string(claims.hypersurface.count());
            });
  return fx.out;
}

std::string render_fixtures(const std::vector<Fixture>& fixtures, Format format) {
  std::ostringstream os;
  std::size_t failed = 0;
  for (const auto& f : fixtures) {
    if (!f.passed) ++failed;
    if (format == Format::records) {
      Json r = Json::object();
      r["record"] = "fixture";
      r["version"] = std::string(version());
      r["name"] = f.name;
      r["claim"] = f.claim;
      r["expected"] = f.expected;
      r["computed"] = f.computed;
      r["passed"] = f.passed;
      os << r.dump() << "\n";
    } else {
      os << (f.passed ? "PASS  " : "FAIL  ") << f.name << "\n"
         << "      expected: " << f.expected << "\n"
         << "      computed: " << f.computed << "\n";
      if (!f.passed) os << "      claim:    " << f.claim << "\n";
    }
  }
  if (format == Format::table)
    os << "# " << (fixtures.size() - failed) << "/" << fixtures.size() << " fixtures passed\n";
  return os.str();
}

}  // namespace logchern::frontend
