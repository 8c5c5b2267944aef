#ifndef TWISTLAB_H
#define TWISTLAB_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum TlStatus {
  TL_STATUS_OK = 0,
  TL_STATUS_NULL_POINTER = 1,
  TL_STATUS_INVALID_UTF8 = 2,
  TL_STATUS_UNKNOWN_SUITE = 3,
  TL_STATUS_INVALID_OPTION = 4,
  TL_STATUS_PANIC = 5,
} TlStatus;

/**
 * Suite options.
 */
typedef struct TlOptions TlOptions;

/**
 * Results of a run, with the rendered JSON cached for `tl_report_json`.
 */
typedef struct TlReport TlReport;

/**
 * Message for the last failed call on this thread; empty if none.  Valid
 * until the next failing call on the same thread.
 */
const char *tl_last_error(void);

/**
 * Default options: order 3, max degree 4, seed 0, one job.
 */
struct TlOptions *tl_options_new(void);

/**
 * # Safety
 * `opts` must come from `tl_options_new` and not be freed twice.
 */
void tl_options_free(struct TlOptions *opts);

/**
 * # Safety
 * `opts` must be a live options handle.
 */
enum TlStatus tl_options_set_order(struct TlOptions *opts, uint32_t order);

/**
 * # Safety
 * `opts` must be a live options handle.
 */
enum TlStatus tl_options_set_max_degree(struct TlOptions *opts, uint32_t max_degree);

/**
 * # Safety
 * `opts` must be a live options handle.
 */
enum TlStatus tl_options_set_seed(struct TlOptions *opts, uint64_t seed);

/**
 * # Safety
 * `opts` must be a live options handle.
 */
enum TlStatus tl_options_set_jobs(struct TlOptions *opts, uint32_t jobs);

/**
 * Catalogue name or path to a definition file.
 *
 * # Safety
 * `opts` must be a live options handle, `algebra` a NUL-terminated string.
 */
enum TlStatus tl_options_set_algebra(struct TlOptions *opts, const char *algebra);

/**
 * A rational such as "-1/4".
 *
 * # Safety
 * `opts` must be a live options handle, `alpha` a NUL-terminated string.
 */
enum TlStatus tl_options_set_alpha(struct TlOptions *opts, const char *alpha);

/**
 * Runs the suites named in `suites` (separated by spaces or commas; "all"
 * runs everything).  A run whose checks fail still returns `Ok`; use
 * `tl_report_passed`.
 *
 * # Safety
 * `opts` may be null (defaults); `suites` must be a NUL-terminated string and
 * `out` a valid pointer.
 */
enum TlStatus tl_run(const struct TlOptions *opts, const char *suites, struct TlReport **out);

/**
 * 1 if no check failed (flagged checks count as passing), 0 otherwise or
 * for a null handle.
 *
 * # Safety
 * `report` must be null or a live report handle.
 */
int32_t tl_report_passed(const struct TlReport *report);

/**
 * Number of failed checks across all suites.
 *
 * # Safety
 * `report` must be null or a live report handle.
 */
uint32_t tl_report_failures(const struct TlReport *report);

/**
 * The JSON report.  The string is owned by the report and lives until
 * `tl_report_free` or the next call on the same handle.  Wall times are
 * included only if `timings` is nonzero.
 *
 * # Safety
 * `report` must be null or a live report handle.
 */
const char *tl_report_json(struct TlReport *report, int32_t timings);

/**
 * # Safety
 * `report` must come from `tl_run` and not be freed twice.
 */
void tl_report_free(struct TlReport *report);

#endif  /* TWISTLAB_H */
