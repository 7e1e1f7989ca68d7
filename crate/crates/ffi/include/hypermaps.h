#ifndef HYPERMAPS_H
#define HYPERMAPS_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum HmStatus {
  HM_STATUS_OK = 0,
  HM_STATUS_INVALID_ARGUMENT = 1,
  HM_STATUS_UNSUPPORTED = 2,
  HM_STATUS_ORACLE_CAP = 3,
  HM_STATUS_BELOW_TRUNCATION = 4,
  HM_STATUS_PARSE = 5,
  HM_STATUS_INTERNAL = 6,
  HM_STATUS_NULL_POINTER = 7,
  HM_STATUS_PANIC = 8,
} HmStatus;

// Counts by genus for one tuple `(l; b_1, …, b_k)`.
typedef struct HmCountResult HmCountResult;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Exact counts for `l` and face degrees `b[0..len]`. On success `*out`
// holds a new handle.
//
// # Safety
// `b` must point to `len` readable values and `out` must be writable.
enum HmStatus hm_count(size_t l, const uint64_t *b, size_t len, struct HmCountResult **out);

// Brute-force counts as a JSON object `{"genus": "p/q", …}`, refusing
// degrees above `cap`.
//
// # Safety
// `b` must point to `len` readable values and `out_json` must be writable.
enum HmStatus hm_brute_count_json(size_t l,
                                  const uint64_t *b,
                                  size_t len,
                                  size_t cap,
                                  char **out_json);

// Number of faces `k`.
//
// # Safety
// `r` must be a live handle or null.
size_t hm_count_result_k(const struct HmCountResult *r);

// Total degree `b_1 + … + b_k`.
//
// # Safety
// `r` must be a live handle or null.
uint64_t hm_count_result_degree(const struct HmCountResult *r);

// Count at genus `g` as a decimal string `p` or `p/q`.
//
// # Safety
// `r` must be a live handle and `out` writable.
enum HmStatus hm_count_result_genus(const struct HmCountResult *r, uint32_t g, char **out);

// Full result as JSON.
//
// # Safety
// `r` must be a live handle and `out` writable.
enum HmStatus hm_count_result_to_json(const struct HmCountResult *r, char **out);

// # Safety
// `r` must come from `hm_count` and not be freed twice.
void hm_count_result_free(struct HmCountResult *r);

// # Safety
// `s` must come from this library and not be freed twice.
void hm_string_free(char *s);

// Message for the last failed call on this thread, or null. The pointer
// stays valid until the next call into the library from this thread.
const char *hm_last_error_message(void);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* HYPERMAPS_H */
