#ifndef CYCLESPEC_H
#define CYCLESPEC_H

#include <stddef.h>

#if defined(_WIN32)
#define CS_API __declspec(dllexport)
#else
#define CS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cs_status {
  CS_OK = 0,
  CS_ERR_USAGE = 1,    /* malformed or missing parameter */
  CS_ERR_DOMAIN = 2,   /* parameters outside the domain of the formula */
  CS_ERR_VERIFY = 3,   /* a cross-check disagreed beyond its budget; the result is still filled */
  CS_ERR_INTERNAL = 4
} cs_status;

typedef enum cs_field_type {
  CS_FIELD_TEXT = 0,
  CS_FIELD_INTEGER = 1,
  CS_FIELD_BOOL = 2,
  CS_FIELD_REAL = 3,
  CS_FIELD_COMPLEX = 4
} cs_field_type;

typedef struct cs_context cs_context;
typedef struct cs_result cs_result;

/* precision_bits = 0 reads CYCLESPEC_PRECISION_BITS, falling back to 128. Returns NULL when
   the requested precision is below 53 bits or the environment value is malformed. */
CS_API cs_context* cs_context_new(unsigned long precision_bits);
CS_API void cs_context_free(cs_context* ctx);
CS_API unsigned long cs_context_precision(const cs_context* ctx);
/* Message of the last failing call on ctx; empty string when none. */
CS_API const char* cs_last_error(const cs_context* ctx);
CS_API const char* cs_version(void);

/* Rationals are passed as "p/q" or decimal strings (converted exactly); complex numbers as
   "a+bi". Every call stores a new result in *out (NULL on hard errors) that the caller frees. */

/* method: "closed", "direct" or "both". */
CS_API cs_status cs_sum(cs_context* ctx, const char* kind, long m, long r, const char* shift, long n,
                        const char* method, cs_result** out);
/* Values at powers 1..count from the closed form. */
CS_API cs_status cs_series(cs_context* ctx, const char* kind, long m, long r, const char* shift,
                           long count, cs_result** out);
/* family: "L", "tilde" or "hat"; route: a route name or "all". */
CS_API cs_status cs_lvalue(cs_context* ctx, const char* family, long m, long chi_index, long n,
                           const char* route, cs_result** out);
CS_API cs_status cs_characters(cs_context* ctx, long m, cs_result** out);
/* method: "image", "spectral" or "both". */
CS_API cs_status cs_heat(cs_context* ctx, long m, const char* beta, const char* t, long x, long y,
                         const char* method, cs_result** out);
/* norm: "kernel" or "cancelled". laplace_horizon NULL or "" skips the Laplace route. */
CS_API cs_status cs_resolvent(cs_context* ctx, long m, const char* beta, long x, long y, const char* s,
                              const char* norm, const char* laplace_horizon, cs_result** out);
CS_API cs_status cs_poles(cs_context* ctx, long m, const char* beta, cs_result** out);
/* suite: "acceptance", "invariants" or "all"; max_m <= 0 keeps the stated ranges. Always runs at
   128 bits. Returns CS_ERR_VERIFY when any check fails. */
CS_API cs_status cs_verify(cs_context* ctx, const char* suite, long max_m, cs_result** out);
/* One row per (m, r, n) with closed value and direct cross-check; r < 0 means every r.
   threads = 0 picks the hardware concurrency. Row order is fixed. */
CS_API cs_status cs_table(cs_context* ctx, const char* kind, long m_lo, long m_hi, long r,
                          const char* shift, long n_lo, long n_hi, unsigned threads, cs_result** out);

CS_API void cs_result_free(cs_result* result);
CS_API size_t cs_result_row_count(const cs_result* result);
CS_API size_t cs_result_field_count(const cs_result* result, size_t row);
CS_API const char* cs_result_field_name(const cs_result* result, size_t row, size_t field);
CS_API cs_field_type cs_result_field_type(const cs_result* result, size_t row, size_t field);
/* Rendered value; complex fields render as "a+bi". */
CS_API const char* cs_result_field_text(const cs_result* result, size_t row, size_t field);
/* Complex and real fields: real and imaginary parts (imaginary is "0" for real fields). */
CS_API const char* cs_result_field_re(const cs_result* result, size_t row, size_t field);
CS_API const char* cs_result_field_im(const cs_result* result, size_t row, size_t field);
/* Exact rational "p/q" when known, otherwise NULL. */
CS_API const char* cs_result_field_exact(const cs_result* result, size_t row, size_t field);

#ifdef __cplusplus
}
#endif

#endif
