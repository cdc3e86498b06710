/*
 * C interface to the Chatelet surface toolkit.
 *
 * The core is C++; this header is the stable binary surface. Surfaces are
 * opaque handles created from raw data or a JSON spec, every entry point
 * returns a status code, and string outputs are heap-allocated (release
 * them with chatelet_string_free). Error details for the most recent
 * failing call on the current thread come from chatelet_last_error().
 */

#ifndef CHATELET_H
#define CHATELET_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum chatelet_status {
    CHATELET_OK = 0,
    CHATELET_ERR_INTERNAL = 1,   /* unexpected failure; see chatelet_last_error() */
    CHATELET_ERR_PARSE = 2,      /* malformed spec text or file */
    CHATELET_ERR_HYPOTHESIS = 3, /* surface hypotheses violated */
    CHATELET_ERR_REGIME = 4,     /* counting requested with a >= 0 */
    CHATELET_ERR_BUDGET = 5,     /* enumeration budget exceeded */
    CHATELET_ERR_OVERFLOW = 6,   /* exact int64 computation would wrap */
    CHATELET_ERR_INVALID = 7     /* bad argument (null pointer, bad grid, ...) */
} chatelet_status;

typedef struct chatelet_surface chatelet_surface;

const char* chatelet_version(void);

/* Thread-local message for the last failing call on this thread. */
const char* chatelet_last_error(void);

void chatelet_string_free(char* s);

/* Diagnostic progress messages from long-running operations. Process-wide. */
typedef void (*chatelet_progress_fn)(const char* message, void* user);
void chatelet_set_progress(chatelet_progress_fn fn, void* user);

/*
 * Surface construction. f_desc lists (c0..c4) with
 * f(x) = c0 x^4 + c1 x^3 + c2 x^2 + c3 x + c4. The JSON form is
 * {"a": -1, "f": [0,1,0,1,0], "label": "optional"}.
 */
chatelet_status chatelet_surface_create(int64_t a, const int64_t f_desc[5],
                                        chatelet_surface** out);
chatelet_status chatelet_surface_parse(const char* json_text, chatelet_surface** out);
chatelet_status chatelet_surface_load(const char* path, chatelet_surface** out);
void chatelet_surface_free(chatelet_surface* s);

/*
 * Hypothesis-by-hypothesis validation report (JSON) for a spec text; the
 * report is produced even when validation fails. Returns CHATELET_OK when
 * the surface is valid, CHATELET_ERR_PARSE / CHATELET_ERR_HYPOTHESIS
 * otherwise (out_json is filled in the hypothesis case too).
 */
chatelet_status chatelet_validate_report(const char* json_text, char** out_json);

/* Picard rank (2, 3 or 4); negative value on a null handle. */
int chatelet_picard_rank(const chatelet_surface* s);

/*
 * Rank report (JSON): the factorization of f, per-factor membership
 * verdicts, the rank, and the prime-scanning cross-check up to
 * probe_bound (0 picks the default 10^4).
 */
chatelet_status chatelet_rank_report(const chatelet_surface* s, uint64_t probe_bound,
                                     char** out_json);

/* Exact point counts: N(B) = T(B)/4. max_B = 0 picks the default budget. */
chatelet_status chatelet_count(const chatelet_surface* s, int64_t B, int64_t max_B,
                               int64_t* T, int64_t* N);

/* Independent P^4-model recount of N(B); small B only. */
chatelet_status chatelet_oracle_count(const chatelet_surface* s, int64_t B,
                                      int64_t oracle_max_B, int64_t* N);

#define CHATELET_GROWTH_ORACLE 1 /* re-derive every row through the P^4 model */
#define CHATELET_GROWTH_DYADIC 2 /* append the dyadic block diagnostic */

/*
 * Growth report over a strictly increasing grid of heights (each >= 2).
 * out_csv and out_json may each be NULL if not wanted.
 */
chatelet_status chatelet_growth_report(const chatelet_surface* s, const int64_t* grid,
                                       size_t grid_len, int flags, int64_t max_B,
                                       int64_t oracle_max_B, char** out_csv,
                                       char** out_json);

/* S(U,V): exact rational (always small enough to print) plus a double. */
chatelet_status chatelet_sieve_sum(const chatelet_surface* s, int64_t U, int64_t V,
                                   char** out_rational, double* out_value);

/* Euler products over primes p <= U for f and for each irreducible factor. */
chatelet_status chatelet_euler_report(const chatelet_surface* s, uint64_t U,
                                      char** out_json);

/* Fraction of fibers killed by the isotropy weight / exact local test. */
chatelet_status chatelet_filter_stats(const chatelet_surface* s, int64_t B,
                                      char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* CHATELET_H */
