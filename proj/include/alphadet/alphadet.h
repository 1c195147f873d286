/* C interface to the alphadet kernel.
 *
 * Handles are opaque. Functions returning ad_status never throw; on failure
 * ad_last_error(ctx) describes the problem. A context must not be used from
 * two threads at once; separate contexts are independent.
 */
#ifndef ALPHADET_ALPHADET_H
#define ALPHADET_ALPHADET_H

#include <stddef.h>

#if defined(_WIN32)
#define AD_API __declspec(dllexport)
#elif defined(__GNUC__)
#define AD_API __attribute__((visibility("default")))
#else
#define AD_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ad_status {
  AD_OK = 0,
  AD_VERIFY_FAILED = 1, /* ran to completion; a verification suite failed */
  AD_ERR_INPUT = 2,
  AD_ERR_SIZE_LIMIT = 3,
  AD_ERR_UNSUPPORTED = 4,
  AD_ERR_INTERNAL = 5
} ad_status;

typedef struct ad_context ad_context;
typedef struct ad_report ad_report;
typedef struct ad_alphapoly ad_alphapoly;

AD_API const char* ad_version(void);
AD_API const char* ad_status_name(ad_status status);

AD_API ad_status ad_context_new(ad_context** out);
AD_API void ad_context_free(ad_context* ctx);
/* name: max_n, max_tableau_size, max_rank_n, allow_large (0/1), jobs. */
AD_API ad_status ad_context_set_limit(ad_context* ctx, const char* name, long long value);
/* Message for the last failing call on ctx; empty after a success. */
AD_API const char* ad_last_error(const ad_context* ctx);

/* command: eval, symbolic, content, decompose, verify, ewens, characters.
 * config_json: a JSON object (may be NULL for {}); a "limits" object in it
 * overrides the context limits. On AD_OK or AD_VERIFY_FAILED *out receives a
 * report owned by the caller. */
AD_API ad_status ad_run(ad_context* ctx, const char* command, const char* config_json, ad_report** out);
AD_API int ad_report_passed(const ad_report* report);
/* Schema-1 JSON document; valid until the report is freed. */
AD_API const char* ad_report_json(const ad_report* report);
/* format: json, text, csv, jsonl. *out is valid until the report is freed. */
AD_API ad_status ad_report_render(ad_context* ctx, ad_report* report, const char* format, const char** out);
AD_API void ad_report_free(ad_report* report);

/* f_lambda(alpha) for the partition parts[0..len). */
AD_API ad_status ad_content_polynomial(ad_context* ctx, const int* parts, size_t len, ad_alphapoly** out);
/* -1 for the zero polynomial. */
AD_API int ad_alphapoly_degree(const ad_alphapoly* p);
AD_API const char* ad_alphapoly_string(const ad_alphapoly* p);
/* Write a rational string into buf (NUL-terminated). *needed, if non-NULL,
 * receives the required size including the NUL; a short buffer is AD_ERR_INPUT. */
AD_API ad_status ad_alphapoly_coefficient(ad_context* ctx, const ad_alphapoly* p, int k, char* buf, size_t buflen,
                                          size_t* needed);
AD_API ad_status ad_alphapoly_eval(ad_context* ctx, const ad_alphapoly* p, const char* alpha, char* buf, size_t buflen,
                                   size_t* needed);
AD_API void ad_alphapoly_free(ad_alphapoly* p);

/* one_line is 1-based, length n. Any output pointer may be NULL. */
AD_API ad_status ad_permutation_stats(ad_context* ctx, const int* one_line, size_t n, int* cycles, int* inversions,
                                      int* sign);

/* det^(alpha)(X) for X given as a JSON array of rational strings; alpha may be
 * a rational, "inf", or "symbolic" (result is then a polynomial in alpha). */
AD_API ad_status ad_alpha_det_eval(ad_context* ctx, const char* matrix_json, const char* alpha, char* buf,
                                   size_t buflen, size_t* needed);

#ifdef __cplusplus
}
#endif

#endif
