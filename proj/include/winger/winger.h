#ifndef WINGER_WINGER_H
#define WINGER_WINGER_H

#include <stddef.h>

#if defined(_WIN32)
#define WINGER_API __declspec(dllexport)
#else
#define WINGER_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct winger_report winger_report;

typedef enum {
  WINGER_OK = 0,
  /* bad option value, null pointer or out-of-range index */
  WINGER_ERR_INVALID_ARGUMENT = 1,
  WINGER_ERR_UNKNOWN_SUITE = 2,
  /* an internal invariant broke; see winger_last_error() */
  WINGER_ERR_INTERNAL = 3
} winger_status;

typedef enum { WINGER_CLAIM_PASS = 0, WINGER_CLAIM_FAIL = 1, WINGER_CLAIM_SKIPPED = 2 } winger_claim_status;

typedef enum {
  /* the product ab applies b first */
  WINGER_RTL = 0,
  /* the product ab applies a first */
  WINGER_LTR = 1
} winger_convention;

typedef struct {
  winger_convention convention;
  int deep;
  int timing;
  /* digits of decimal embeddings in text tables, 1..200 */
  int digits;
  /* degree-6 monomial slot 0..27 of F to perturb, or -1 */
  int corrupt_f;
  /* matrix 0..59 and row-major entry 0..8 to perturb, or -1 */
  int corrupt_matrix_element;
  int corrupt_matrix_entry;
  /* worker threads, 0 for the hardware count */
  unsigned threads;
} winger_options;

WINGER_API void winger_options_init(winger_options *opts);

/* Runs a suite ("characters", ..., "all"). On success *out owns a report to
   release with winger_report_free. opts may be NULL for defaults. */
WINGER_API winger_status winger_run(const char *suite, const winger_options *opts, winger_report **out);

WINGER_API size_t winger_report_claim_count(const winger_report *r);
WINGER_API size_t winger_report_failed_count(const winger_report *r);
/* NULL when i is out of range. */
WINGER_API const char *winger_report_claim_id(const winger_report *r, size_t i);
WINGER_API const char *winger_report_claim_witness(const winger_report *r, size_t i);
/* WINGER_CLAIM_FAIL when i is out of range. */
WINGER_API winger_claim_status winger_report_claim_status(const winger_report *r, size_t i);
/* Index of the claim with this id, or (size_t)-1. */
WINGER_API size_t winger_report_find(const winger_report *r, const char *id);
WINGER_API const char *winger_report_json(const winger_report *r);
WINGER_API const char *winger_report_text(const winger_report *r);
WINGER_API void winger_report_free(winger_report *r);

WINGER_API size_t winger_suite_count(void);
WINGER_API const char *winger_suite_name(size_t i);
/* Claim ids of the acceptance criteria 1..13; NULL outside that range. */
WINGER_API const char *winger_criterion_id(size_t criterion);

/* Message of the last failing call on this thread, "" if none. */
WINGER_API const char *winger_last_error(void);
WINGER_API const char *winger_version(void);

#ifdef __cplusplus
}
#endif

#endif /* WINGER_WINGER_H */
