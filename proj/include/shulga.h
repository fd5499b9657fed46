/* C interface to the staggered continued-fraction decomposition library.
 *
 * All functions return a shulga_status; every out-parameter is written only
 * on SHULGA_OK. Strings returned through char** are heap-allocated JSON (or
 * CSV where noted) and must be released with shulga_string_free. Handles are
 * opaque and must be released with their matching *_free. On any error,
 * shulga_last_error() returns a thread-local description of the failure.
 *
 * Input grammar accepted by shulga_real_parse:
 *   rational     "p/q" or "p"          (q > 0 after sign normalization)
 *   quadratic    "sqrt(D)" or "(P+sqrt(D))/Q"   (D > 0 and not a square)
 *   digit list   "[a0;d1,d2,...]"      (finite prefix of an expansion; the
 *                                       digit budget is the list length)
 */

#ifndef SHULGA_H
#define SHULGA_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
    SHULGA_OK = 0,
    SHULGA_EINVAL = 1,     /* argument outside the documented domain */
    SHULGA_EPARSE = 2,     /* malformed input text */
    SHULGA_EPRECISION = 3, /* digit-list budget exhausted */
    SHULGA_EAUDIT = 4,     /* a scan hit a failing audit; details in last_error */
    SHULGA_EIO = 5,        /* could not write an output file */
    SHULGA_EINTERNAL = 6,  /* invariant violation; a bug, not a user error */
} shulga_status;

typedef struct shulga_real shulga_real;
typedef struct shulga_result shulga_result;

/* Parse a number per the grammar above. */
shulga_status shulga_real_parse(const char* text, shulga_real** out);
void shulga_real_free(shulga_real* x);

/* Continued-fraction expansion of x as JSON: integer part, digits, and for
 * quadratic inputs the period. max_digits = 0 means the library default. */
shulga_status shulga_expand(const shulga_real* x, size_t max_digits, char** json_out);

/* Run the decomposition. max_steps = 0 means the library default cap. */
shulga_status shulga_decompose(const shulga_real* x, size_t max_steps, shulga_result** out);
void shulga_result_free(shulga_result* r);

/* The run record as JSON: digits, termination, exact beta/gamma when the run
 * terminated, and the stop reason. */
shulga_status shulga_result_record(const shulga_result* r, char** json_out);

/* Re-derive every checkable invariant of the run; JSON maps check names to
 * {"ok": bool, "witness": string}. Failures are reported, not raised. */
shulga_status shulga_audit_record(const shulga_result* r, char** json_out);

/* Decompose and audit every reduced p/q with q <= q_max. When csv_path is
 * non-NULL, one CSV row per fraction is streamed there. Returns SHULGA_EAUDIT
 * on the first failing fraction. jobs = 0 means one worker. */
shulga_status shulga_scan(unsigned long q_max, unsigned jobs, const char* csv_path,
                          char** summary_json);

/* The deterministic linear-digit construction, depth terms. emit_csv = 0
 * yields JSON (digits, selections, verification verdicts), nonzero yields a
 * CSV table with one row per term. */
shulga_status shulga_construct(size_t depth, int emit_csv, char** out);

/* Exhaustive search for staggered digit prefixes of the given depth with all
 * b digits <= b_cap; JSON list (often empty). */
shulga_status shulga_enumerate(size_t depth, unsigned long b_cap, char** json_out);

/* First fraction with q <= q_max whose c_l is below c_1, as JSON; JSON null
 * when none exists. */
shulga_status shulga_find_c_drop(size_t l, unsigned long q_max, char** json_out);

void shulga_string_free(char* s);

/* Thread-local message for the most recent failure in this thread. */
const char* shulga_last_error(void);

#ifdef __cplusplus
}
#endif

#endif /* SHULGA_H */
