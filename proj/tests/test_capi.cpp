#include <cstring>
#include <string>

#include "doctest.h"
#include "logchern/logchern.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  lc_string_free(s);
  return out;
}

struct Model {
  lc_model* p = nullptr;
  ~Model() { lc_model_free(p); }
};

struct Pair {
  lc_pair* p = nullptr;
  ~Pair() { lc_pair_free(p); }
};

struct Report {
  lc_report* p = nullptr;
  ~Report() { lc_report_free(p); }
};

}  // namespace

TEST_CASE("version and status strings") {
  CHECK(std::strlen(lc_version()) > 0);
  CHECK(std::string(lc_status_string(LC_OK)) != std::string(lc_status_string(LC_ERR_PARSE)));
  CHECK(lc_status_string(static_cast<lc_status>(99)) != nullptr);
}

TEST_CASE("F_2 pair through handles") {
  Model m;
  REQUIRE(lc_model_hirzebruch(2, &m.p) == LC_OK);
  int dim = 0;
  CHECK(lc_model_dim(m.p, &dim) == LC_OK);
  CHECK(dim == 2);

  Pair pair;
  REQUIRE(lc_pair_create(m.p, &pair.p) == LC_OK);
  const int64_t c0[] = {1, 0};
  const int64_t cinf[] = {1, 2};
  CHECK(lc_pair_add_component(pair.p, "C0", c0, 2) == LC_OK);
  CHECK(lc_pair_add_component(pair.p, "Cinf", cinf, 2) == LC_OK);

  Report r;
  REQUIRE(lc_report_compute(pair.p, nullptr, 0, &r.p) == LC_OK);
  int64_t rank = 0;
  CHECK(lc_report_rank(r.p, &rank) == LC_OK);
  CHECK(rank == 2);
  char* s = nullptr;
  CHECK(lc_report_value(r.p, LC_FIELD_LOG_C1, &s) == LC_OK);
  CHECK(take(s) == "2f");
  CHECK(lc_report_value(r.p, LC_FIELD_DISCRIMINANT, &s) == LC_OK);
  CHECK(take(s) == "0");
  CHECK(lc_report_value(r.p, LC_FIELD_LOG_C2, &s) == LC_OK);
  CHECK(take(s) == "0");
  int en = 0, en1 = 0, nef = 0;
  CHECK(lc_report_flags(r.p, &en, &en1, &nef) == LC_OK);
  CHECK(en == 1);
  CHECK(en1 == 1);
  CHECK(nef == 1);
  CHECK(lc_report_to_json(r.p, &s) == LC_OK);
  CHECK(take(s).find("\"discriminant\":\"0\"") != std::string::npos);
}

TEST_CASE("P^7 (2,1,1) through handles") {
  Model m;
  REQUIRE(lc_model_projective_space(7, &m.p) == LC_OK);
  Pair pair;
  REQUIRE(lc_pair_create(m.p, &pair.p) == LC_OK);
  const int64_t two[] = {2};
  const int64_t one[] = {1};
  lc_pair_add_component(pair.p, "Q", two, 1);
  lc_pair_add_component(pair.p, "A", one, 1);
  lc_pair_add_component(pair.p, "B", one, 1);
  Report r;
  REQUIRE(lc_report_compute(pair.p, nullptr, 0, &r.p) == LC_OK);
  char* s = nullptr;
  lc_report_value(r.p, LC_FIELD_DISCRIMINANT, &s);
  CHECK(take(s) == "1/7");
  int en = 0, en1 = 0, nef = 0;
  lc_report_flags(r.p, &en, &en1, &nef);
  CHECK(en == 0);
  CHECK(en1 == 1);
}

TEST_CASE("status codes and last_error") {
  lc_model* m = nullptr;
  CHECK(lc_model_projective_space(1, &m) == LC_ERR_INVALID_ARGUMENT);
  CHECK(m == nullptr);
  CHECK(std::strlen(lc_last_error()) > 0);
  CHECK(lc_model_projective_space(3, nullptr) == LC_ERR_NULL_ARGUMENT);

  Model p3;
  REQUIRE(lc_model_projective_space(3, &p3.p) == LC_OK);
  Pair pair;
  REQUIRE(lc_pair_create(p3.p, &pair.p) == LC_OK);
  const int64_t two[] = {1, 2};
  CHECK(lc_pair_add_component(pair.p, "A", two, 2) == LC_ERR_INVALID_ARGUMENT);
  const int64_t neg[] = {-1};
  CHECK(lc_pair_add_component(pair.p, "A", neg, 1) == LC_ERR_INVALID_ARGUMENT);
  CHECK(lc_pair_add_component(pair.p, nullptr, neg, 1) == LC_ERR_NULL_ARGUMENT);

  int nef = -1;
  const int64_t k[] = {-4};
  CHECK(lc_model_is_nef(p3.p, k, 1, &nef) == LC_OK);
  CHECK(nef == 0);

  char* out = nullptr;
  CHECK(lc_report_document("{\"ambient\": {\"kind\": \"projective_space\", \"n\": 3, \"m\": 1}, \"divisors\": []}",
                           LC_FORMAT_RECORDS, &out) == LC_ERR_PARSE);
  CHECK(out == nullptr);
  CHECK(std::string(lc_last_error()).find("ambient.m") != std::string::npos);

  lc_search_config cfg;
  lc_search_config_init(&cfg);
  cfg.n_min = 5;
  cfg.n_max = 4;
  size_t count = 0;
  CHECK(lc_enumerate(&cfg, LC_FORMAT_RECORDS, &out, &count) == LC_ERR_EMPTY_RANGE);

  lc_model_free(nullptr);
  lc_pair_free(nullptr);
  lc_report_free(nullptr);
  lc_string_free(nullptr);
}

TEST_CASE("document, enumerate and verify") {
  char* out = nullptr;
  REQUIRE(lc_report_document("[{\"ambient\": {\"kind\": \"hirzebruch\", \"m\": 3}, \"divisors\": []}]",
                             LC_FORMAT_RECORDS, &out) == LC_OK);
  CHECK(take(out).find("\"record\":\"report\"") != std::string::npos);

  lc_search_config cfg;
  lc_search_config_init(&cfg);
  cfg.n_min = 7;
  cfg.n_max = 7;
  cfg.mode = LC_MODE_N_PLUS_1;
  size_t count = 0;
  REQUIRE(lc_enumerate(&cfg, LC_FORMAT_RECORDS, &out, &count) == LC_OK);
  CHECK(count >= 1);
  CHECK(take(out).find("\"partition\":[2,1,1]") != std::string::npos);

  int passed = 0;
  REQUIRE(lc_verify_paper(LC_FORMAT_TABLE, &out, &passed) == LC_OK);
  CHECK(passed == 1);
  take(out);
}

TEST_CASE("remark claims through the C API") {
  char* out = nullptr;
  size_t pn = 0, hyp = 0;
  int met = 0;
  REQUIRE(lc_remark_claims(4, LC_FORMAT_RECORDS, &out, &pn, &hyp, &met) == LC_OK);
  take(out);
  CHECK(pn == 65);
  CHECK(hyp == 98);
  CHECK(met == 1);
}
