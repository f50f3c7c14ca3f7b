// logchern command-line frontend. Talks to the library only through the C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "logchern/logchern.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerify = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Owns a string returned by the library.
struct LcString {
  char* p = nullptr;
  ~LcString() { lc_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

int status_exit(lc_status s) { return s == LC_ERR_INTERNAL ? kExitVerify : kExitUsage; }

int report_failure(lc_status s) {
  std::cerr << "logchern: " << lc_status_string(s) << ": " << lc_last_error() << "\n";
  return status_exit(s);
}

std::pair<long long, long long> parse_range(const std::string& text, const char* flag) {
  auto dots = text.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      long long v = std::stoll(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {v, v};
    }
    auto a = text.substr(0, dots);
    auto b = text.substr(dots + 2);
    long long lo = std::stoll(a, &used);
    if (used != a.size()) throw std::invalid_argument(text);
    long long hi = std::stoll(b, &used);
    if (used != b.size()) throw std::invalid_argument(text);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw UsageError(std::string(flag) + ": expected A..B or A, got '" + text + "'");
  }
}

lc_format parse_format(const std::string& f) { return f == "records" ? LC_FORMAT_RECORDS : LC_FORMAT_TABLE; }

int emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    std::cout.flush();
    return kExitOk;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) {
    std::cerr << "logchern: cannot write '" << out_path << "'\n";
    return kExitUsage;
  }
  f << text;
  return kExitOk;
}

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

// "C0=1,f=2" or "H=3" into coordinates ordered by the model's basis.
std::vector<int64_t> parse_class(const std::string& text, const std::string& kind) {
  std::vector<std::string> names = kind == "hirzebruch" ? std::vector<std::string>{"C0", "f"}
                                   : kind == "hypersurface" ? std::vector<std::string>{"h"}
                                                            : std::vector<std::string>{"H"};
  std::vector<int64_t> coords(names.size(), 0);
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("--class: expected name=value, got '" + item + "'");
    auto name = item.substr(0, eq);
    std::size_t i = 0;
    while (i < names.size() && names[i] != name) ++i;
    if (i == names.size()) throw UsageError("--class: generator '" + name + "' not available on " + kind);
    try {
      std::size_t used = 0;
      auto value = item.substr(eq + 1);
      coords[i] += std::stoll(value, &used);
      if (used != value.size()) throw std::invalid_argument(value);
    } catch (const std::logic_error&) {
      throw UsageError("--class: bad integer in '" + item + "'");
    }
  }
  return coords;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Logarithmic Chern classes and Bogomolov-Gieseker discriminants of log smooth pairs"};
  app.set_version_flag("--version", std::string(lc_version()));
  app.require_subcommand(1);

  std::string format = "table";
  std::string out_path;
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output encoding")->check(CLI::IsMember({"table", "records"}));
    sub->add_option("--out", out_path, "Write output to this path instead of stdout");
  };

  auto* report = app.add_subcommand("report", "Evaluate the pairs described in a JSON document");
  std::string input_path;
  report->add_option("input", input_path, "Input document (default: standard input)");
  add_output(report);

  auto* enumerate = app.add_subcommand("enumerate", "Search for equality cases");
  std::string family = "pn";
  std::string mode = "either";
  bool nef = true;
  std::string n_range = "2..10";
  std::string q_range;
  long long s_max = 0;
  bool keep_trivial = false;
  unsigned jobs = 1;
  bool remark_counts = false;
  auto* family_opt = enumerate->add_option("--family", family, "pn or hypersurface")
                         ->check(CLI::IsMember({"pn", "hypersurface"}));
  enumerate->add_option("--mode", mode, "n, n1 or either")->check(CLI::IsMember({"n", "n1", "either"}));
  enumerate->add_flag("--nef,!--no-nef", nef, "Require -(K+D) nef (default on)");
  auto* n_opt = enumerate->add_option("--n", n_range, "Dimension range A..B");
  auto* q_opt = enumerate->add_option("--q", q_range, "Hypersurface degree range A..B (q >= 2)");
  auto* s_opt = enumerate->add_option("--s-max", s_max, "Cap on total degree")->check(CLI::PositiveNumber);
  enumerate->add_flag("--keep-trivial", keep_trivial, "Keep D = 0 and, on P^n, D = H");
  enumerate->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1u, 256u));
  auto* remark_opt = enumerate->add_flag("--remark-counts", remark_counts,
                                         "Count equality cases under the default claim bounds");
  remark_opt->excludes(family_opt)->excludes(n_opt)->excludes(q_opt)->excludes(s_opt);
  add_output(enumerate);

  auto* verify = app.add_subcommand("verify-paper", "Run the built-in published-value fixtures");
  add_output(verify);

  auto* nef_cmd = app.add_subcommand("nef", "Test a divisor class for nefness");
  std::string kind;
  long long nef_n = 0;
  long long nef_q = 0;
  long long nef_m = 0;
  std::string cls;
  nef_cmd->add_option("--kind", kind, "projective_space, hypersurface or hirzebruch")
      ->required()
      ->check(CLI::IsMember({"projective_space", "hypersurface", "hirzebruch"}));
  nef_cmd->add_option("--n", nef_n, "Dimension");
  nef_cmd->add_option("--q", nef_q, "Hypersurface degree");
  nef_cmd->add_option("--m", nef_m, "Hirzebruch index");
  nef_cmd->add_option("--class", cls, "Divisor, e.g. C0=1,f=3")->required();
  add_output(nef_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    auto fmt = parse_format(format);
    LcString text;

    if (*report) {
      auto doc = read_input(input_path);
      auto s = lc_report_document(doc.c_str(), fmt, &text.p);
      if (s != LC_OK) return report_failure(s);
      return emit(text.str(), out_path);
    }

    if (*enumerate) {
      if (remark_counts) {
        size_t pn = 0;
        size_t hyp = 0;
        int met = 0;
        auto s = lc_remark_claims(jobs, fmt, &text.p, &pn, &hyp, &met);
        if (s != LC_OK) return report_failure(s);
        int rc = emit(text.str(), out_path);
        return rc != kExitOk ? rc : (met ? kExitOk : kExitVerify);
      }
      lc_search_config cfg;
      lc_search_config_init(&cfg);
      cfg.family = family == "hypersurface" ? LC_FAMILY_HYPERSURFACE : LC_FAMILY_PN;
      if (cfg.family == LC_FAMILY_PN && !q_range.empty())
        throw UsageError("--q only applies to --family hypersurface");
      cfg.mode = mode == "n" ? LC_MODE_N : (mode == "n1" ? LC_MODE_N_PLUS_1 : LC_MODE_EITHER);
      cfg.require_nef = nef;
      cfg.exclude_trivial = !keep_trivial;
      auto [n_lo, n_hi] = parse_range(n_range, "--n");
      if (n_lo > n_hi) throw UsageError("--n: empty range " + n_range);
      cfg.n_min = static_cast<int>(n_lo);
      cfg.n_max = static_cast<int>(n_hi);
      if (cfg.family == LC_FAMILY_HYPERSURFACE) {
        auto [q_lo, q_hi] = q_range.empty() ? std::pair<long long, long long>{2, 2} : parse_range(q_range, "--q");
        if (q_lo < 2) throw UsageError("--q: hypersurface degrees start at 2");
        if (q_lo > q_hi) throw UsageError("--q: empty range " + q_range);
        cfg.q_min = q_lo;
        cfg.q_max = q_hi;
      }
      cfg.s_max = s_max;
      cfg.workers = jobs;
      size_t count = 0;
      auto s = lc_enumerate(&cfg, fmt, &text.p, &count);
      if (s != LC_OK) return report_failure(s);
      return emit(text.str(), out_path);
    }

    if (*verify) {
      int ok = 0;
      auto s = lc_verify_paper(fmt, &text.p, &ok);
      if (s != LC_OK) return report_failure(s);
      int rc = emit(text.str(), out_path);
      if (rc != kExitOk) return rc;
      if (!ok) std::cerr << "logchern: fixture verification failed\n";
      return ok ? kExitOk : kExitVerify;
    }

    if (*nef_cmd) {
      auto coords = parse_class(cls, kind);
      lc_model* model = nullptr;
      lc_status s = LC_OK;
      if (kind == "projective_space")
        s = lc_model_projective_space(static_cast<int>(nef_n), &model);
      else if (kind == "hypersurface")
        s = lc_model_hypersurface(static_cast<int>(nef_n), nef_q, &model);
      else
        s = lc_model_hirzebruch(nef_m, &model);
      if (s != LC_OK) return report_failure(s);
      int is_nef = 0;
      s = lc_model_is_nef(model, coords.data(), coords.size(), &is_nef);
      lc_model_free(model);
      if (s != LC_OK) return report_failure(s);
      std::string body = fmt == LC_FORMAT_RECORDS
                             ? std::string("{\"record\":\"nef\",\"class\":\"") + cls + "\",\"nef\":" +
                                   (is_nef ? "true" : "false") + "}\n"
                             : cls + (is_nef ? " is nef\n" : " is not nef\n");
      return emit(body, out_path);
    }
  } catch (const UsageError& e) {
    std::cerr << "logchern: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
