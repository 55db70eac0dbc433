/* C interface to the cwlin componentwise-linearity library. */

#ifndef CWLIN_H
#define CWLIN_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of a call. `Ok` means the requested computation completed, whatever
 * the mathematical verdict was.
 */
typedef enum CwlinStatus {
  /**
   * Completed.
   */
  CWLIN_STATUS_OK = 0,
  /**
   * The input text failed to lex, parse, or resolve.
   */
  CWLIN_STATUS_PARSE_ERROR = 2,
  /**
   * A criterion's mathematical preconditions are not met.
   */
  CWLIN_STATUS_INAPPLICABLE = 3,
  /**
   * An internal cross-check contradicted the computed answer, or a
   * verification campaign found a violation; either is a library bug.
   */
  CWLIN_STATUS_CROSS_CHECK_FAILED = 4,
  /**
   * Null pointer, invalid UTF-8, unknown name, or out-of-range argument.
   */
  CWLIN_STATUS_INVALID_ARGUMENT = 5,
  /**
   * The library panicked; the handle is still valid but the call did
   * nothing.
   */
  CWLIN_STATUS_INTERNAL_ERROR = 6,
} CwlinStatus;

/**
 * An opaque parsed document: a ring plus named ideals and full sets.
 */
typedef struct CwlinDocument CwlinDocument;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread, or null if no call
 * has failed yet. Valid until the next failing call on the same thread.
 */
const char *cwlin_last_error(void);

/**
 * Library version as a static string; do not free.
 */
const char *cwlin_version(void);

/**
 * Releases a string returned through a `char **out` parameter.
 *
 * # Safety
 * `s` must be a pointer previously returned by this library, or null.
 */
void cwlin_string_free(char *s);

/**
 * Releases a document handle.
 *
 * # Safety
 * `doc` must be a handle from `cwlin_parse` that has not been freed, or
 * null.
 */
void cwlin_document_free(struct CwlinDocument *doc);

/**
 * Parses document text; on success stores a new handle in `*out`.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a valid location.
 */
enum CwlinStatus cwlin_parse(const char *text, struct CwlinDocument **out);

/**
 * Decides componentwise linearity of a named ideal.
 *
 * # Safety
 * `doc` must be a live handle; `ideal` a NUL-terminated string; `out` a
 * valid location.
 */
enum CwlinStatus cwlin_check_cwl(const struct CwlinDocument *doc, const char *ideal, bool *out);

/**
 * Castelnuovo-Mumford regularity of a named ideal.
 *
 * # Safety
 * Same contract as `cwlin_check_cwl`.
 */
enum CwlinStatus cwlin_regularity(const struct CwlinDocument *doc,
                                  const char *ideal,
                                  uint32_t *out);

/**
 * Minimal graded Betti table of a named ideal, as JSON.
 *
 * # Safety
 * Same contract as `cwlin_check_cwl`; `*out` receives a caller-owned
 * string.
 */
enum CwlinStatus cwlin_betti_json(const struct CwlinDocument *doc, const char *ideal, char **out);

/**
 * Binary ideal operation: `op` is one of `intersect`, `sum`, `product`,
 * `colon`. For `colon`, `b` may name an ideal or spell a single term. The
 * result is JSON `{"gens": [...]}`.
 *
 * # Safety
 * `doc` must be a live handle; `op`, `a`, `b` NUL-terminated strings;
 * `out` a valid location, receiving a caller-owned string on `Ok`.
 */
enum CwlinStatus cwlin_binop_json(const struct CwlinDocument *doc,
                                  const char *op,
                                  const char *a,
                                  const char *b,
                                  char **out);

/**
 * Degree-`degree` component ideal of a named ideal, as JSON
 * `{"gens": [...]}`.
 *
 * # Safety
 * Same contract as `cwlin_check_cwl`; `*out` receives a caller-owned
 * string.
 */
enum CwlinStatus cwlin_component_json(const struct CwlinDocument *doc,
                                      const char *ideal,
                                      uint32_t degree,
                                      char **out);

/**
 * Runs one sum criterion on a pair of named ideals and writes the verdict
 * as JSON. `criterion` is one of `fullsum`, `hv`, `componentwise`,
 * `lin_plus_lin`, `cwl_plus_linear`. `t_max` and `s_max` bound the
 * componentwise and socle scans; pass 0 for the default.
 *
 * The verdict JSON is written for `Ok`, `Inapplicable`, and
 * `CrossCheckFailed` alike.
 *
 * # Safety
 * `doc` must be a live handle; `criterion`, `a`, `b` NUL-terminated
 * strings; `out` a valid location, receiving a caller-owned string.
 */
enum CwlinStatus cwlin_sum_check_json(const struct CwlinDocument *doc,
                                      const char *criterion,
                                      const char *a,
                                      const char *b,
                                      uint32_t t_max,
                                      uint32_t s_max,
                                      char **out);

/**
 * Greedy componentwise-linear ordering certificate for a two-variable
 * ideal, as JSON. A definite "no ordering exists" is `Ok` with
 * `{"ordered": false, ...}`.
 *
 * # Safety
 * Same contract as `cwlin_check_cwl`; `*out` receives a caller-owned
 * string on `Ok`.
 */
enum CwlinStatus cwlin_order_json(const struct CwlinDocument *doc, const char *ideal, char **out);

/**
 * Fullness and m-fullness of a named ideal; the verdict is written as JSON
 * for `Ok`, `Inapplicable`, and `CrossCheckFailed` alike. `d_max` bounds
 * the graded tables; pass 0 for the default.
 *
 * # Safety
 * Same contract as `cwlin_check_cwl`; `*out` receives a caller-owned
 * string.
 */
enum CwlinStatus cwlin_full_check_json(const struct CwlinDocument *doc,
                                       const char *ideal,
                                       uint32_t d_max,
                                       char **out);

/**
 * Runs a verification campaign and writes its report as JSON. `count` and
 * `max_gen_degree` override the campaign defaults when nonzero. Violations
 * return `CrossCheckFailed` with the report still written.
 *
 * # Safety
 * `theorem` must be a NUL-terminated string and `out` a valid location;
 * `*out` receives a caller-owned string on `Ok` and `CrossCheckFailed`.
 */
enum CwlinStatus cwlin_campaign_json(const char *theorem,
                                     uint64_t count,
                                     uint32_t max_gen_degree,
                                     uint64_t seed,
                                     char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CWLIN_H */
