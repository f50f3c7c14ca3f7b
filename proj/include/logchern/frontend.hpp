#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "logchern/bg.hpp"
#include "logchern/search.hpp"

namespace logchern::frontend {

using Json = nlohmann::ordered_json;

std::string_view version();

enum class Format { table, records };

// Integer coordinates keyed by generator name ("H", "h", "C0", "f").
using ClassSpec = std::vector<std::pair<std::string, std::int64_t>>;

struct DivisorSpec {
  std::string label;
  ClassSpec cls;
  friend bool operator==(const DivisorSpec&, const DivisorSpec&) = default;
};

// One pair as written in an input document:
//
//   {"ambient": {"kind": "hirzebruch", "m": 2},
//    "divisors": [{"label": "C0", "class": {"C0": 1}},
//                 {"label": "Cinf", "class": {"C0": 1, "f": 2}}],
//    "polarization": {"C0": 1, "f": 3}}            // optional
//
// A document is one such object or an array of them. Unknown keys are errors.
struct PairDescriptor {
  ModelKind kind = ModelKind::projective_space;
  std::optional<std::int64_t> n;
  std::optional<std::int64_t> q;
  std::optional<std::int64_t> m;
  std::vector<DivisorSpec> divisors;
  std::optional<ClassSpec> polarization;
  friend bool operator==(const PairDescriptor&, const PairDescriptor&) = default;
};

// Throws Error(parse_error) naming the offending key path.
std::vector<PairDescriptor> parse_document(std::string_view text);
PairDescriptor parse_descriptor(const Json& j, const std::string& path = "");
Json to_json(const PairDescriptor& d);

AmbientModel build_model(const PairDescriptor& d);
LogPair build_pair(const PairDescriptor& d);
std::optional<CycleClass> build_polarization(const PairDescriptor& d);
// Display string for a divisor, adding the C_inf alias on F_m.
std::string divisor_display(const AmbientModel& model, const CycleClass& cls);

struct ReportRecord {
  std::string version;
  PairDescriptor input;
  BGReport report;
  friend bool operator==(const ReportRecord&, const ReportRecord&) = default;
};

ReportRecord make_report_record(const PairDescriptor& d);
Json to_json(const ReportRecord& r);
ReportRecord report_record_from_json(const Json& j);
std::string render_report_table(const ReportRecord& r);

Json class_to_json(const CycleClass& c);
CycleClass class_from_json(const ModelRef& model, int grade, const Json& j, const std::string& path);

// Reads a document and renders one record per pair.
std::string run_report(std::string_view document, Format format);

Json bounds_to_json(const SearchConfig& cfg);
Json case_to_json(const EqualityCase& c, const SearchConfig& cfg);
std::string render_cases(const std::vector<EqualityCase>& cases, const SearchConfig& cfg, Format format);
std::string render_claims(const RemarkClaims& claims, Format format);

struct Fixture {
  std::string name;
  std::string claim;  // the published statement the fixture reproduces
  std::string expected;
  std::string computed;
  bool passed;
};

std::vector<Fixture> run_fixtures();
std::string render_fixtures(const std::vector<Fixture>& fixtures, Format format);

}  // namespace logchern::frontend
