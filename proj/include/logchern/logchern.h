/*
 * logchern C API.
 *
 * Logarithmic Chern classes and Bogomolov-Gieseker discriminants of log
 * smooth pairs on P^n, hypersurfaces of P^{n+1} and Hirzebruch surfaces.
 *
 * All objects are opaque handles owned by the caller and released with the
 * matching *_free function. Every fallible call returns an lc_status; on
 * failure lc_last_error() describes the problem (per thread). Strings handed
 * out through char** parameters are released with lc_string_free.
 */
#ifndef LOGCHERN_H
#define LOGCHERN_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(LOGCHERN_BUILDING)
#    define LC_API __declspec(dllexport)
#  else
#    define LC_API __declspec(dllimport)
#  endif
#else
#  define LC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lc_status {
  LC_OK = 0,
  LC_ERR_NULL_ARGUMENT = 1,
  LC_ERR_INVALID_ARGUMENT = 2,
  LC_ERR_MODEL_MISMATCH = 3,
  LC_ERR_GRADE_MISMATCH = 4,
  LC_ERR_PARSE = 5,
  LC_ERR_EMPTY_RANGE = 6,
  LC_ERR_INTERNAL = 7
} lc_status;

typedef enum lc_format { LC_FORMAT_TABLE = 0, LC_FORMAT_RECORDS = 1 } lc_format;
typedef enum lc_family { LC_FAMILY_PN = 0, LC_FAMILY_HYPERSURFACE = 1 } lc_family;
typedef enum lc_mode { LC_MODE_N = 0, LC_MODE_N_PLUS_1 = 1, LC_MODE_EITHER = 2 } lc_mode;

typedef enum lc_report_field {
  LC_FIELD_C1_SQ = 0,        /* c1^2 . H^{n-2} */
  LC_FIELD_C2_EVAL = 1,      /* c2 . H^{n-2} */
  LC_FIELD_DISCRIMINANT = 2, /* rank-n discriminant */
  LC_FIELD_LOG_C1 = 3,       /* class, e.g. "2f" */
  LC_FIELD_LOG_C2 = 4,
  LC_FIELD_POLARIZATION = 5
} lc_report_field;

typedef struct lc_model lc_model;
typedef struct lc_pair lc_pair;
typedef struct lc_report lc_report;

LC_API const char* lc_version(void);
LC_API const char* lc_status_string(lc_status status);
LC_API const char* lc_last_error(void);
LC_API void lc_string_free(char* s);

/* Models. Coordinates are (H), (h) or (C0, f). */
LC_API lc_status lc_model_projective_space(int n, lc_model** out);
LC_API lc_status lc_model_hypersurface(int n, int64_t q, lc_model** out);
LC_API lc_status lc_model_hirzebruch(int64_t m, lc_model** out);
LC_API void lc_model_free(lc_model* model);
LC_API lc_status lc_model_dim(const lc_model* model, int* out);
LC_API lc_status lc_model_is_nef(const lc_model* model, const int64_t* coords, size_t ncoords, int* out);

/* Log pairs: a model plus ordered labelled components. */
LC_API lc_status lc_pair_create(const lc_model* model, lc_pair** out);
LC_API lc_status lc_pair_add_component(lc_pair* pair, const char* label, const int64_t* coords, size_t ncoords);
LC_API void lc_pair_free(lc_pair* pair);

/* Reports. polarization may be NULL for the model's default. */
LC_API lc_status lc_report_compute(const lc_pair* pair, const int64_t* polarization, size_t ncoords,
                                   lc_report** out);
LC_API void lc_report_free(lc_report* report);
LC_API lc_status lc_report_rank(const lc_report* report, int64_t* out);
LC_API lc_status lc_report_value(const lc_report* report, lc_report_field field, char** out);
LC_API lc_status lc_report_flags(const lc_report* report, int* equality_n, int* equality_n_plus_1,
                                 int* minus_k_plus_d_nef);
LC_API lc_status lc_report_to_json(const lc_report* report, char** out);

/* Document level: one rendered record per pair in a JSON input document. */
LC_API lc_status lc_report_document(const char* document, lc_format format, char** out);

typedef struct lc_search_config {
  lc_family family;
  int n_min;
  int n_max;
  lc_mode mode;
  int require_nef;
  int exclude_trivial;
  int64_t s_max; /* 0 selects the default cap */
  int64_t q_min;
  int64_t q_max;
  unsigned workers;
} lc_search_config;

LC_API void lc_search_config_init(lc_search_config* config);
LC_API lc_status lc_enumerate(const lc_search_config* config, lc_format format, char** out, size_t* count);
LC_API lc_status lc_remark_claims(unsigned workers, lc_format format, char** out, size_t* pn_count,
                                  size_t* hypersurface_count, int* floors_met);
LC_API lc_status lc_verify_paper(lc_format format, char** out, int* all_passed);

#ifdef __cplusplus
}
#endif

#endif /* LOGCHERN_H */
