/* C interface to the hermitian integral geometry engine.
 *
 * Every call returns a hig_status. On success, string results are written to
 * *out and must be released with hig_free_string. On failure *out is left
 * NULL and hig_last_error() describes the problem (per thread). */
#ifndef HIG_HIG_H
#define HIG_HIG_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define HIG_API __declspec(dllexport)
#else
#define HIG_API __attribute__((visibility("default")))
#endif

typedef enum hig_status {
  HIG_OK = 0,
  HIG_ERR_INVALID_ARGUMENT = 1,
  HIG_ERR_PARSE = 2,
  HIG_ERR_DOMAIN = 3,
  HIG_ERR_RANGE = 4,
  HIG_ERR_INTERNAL = 5
} hig_status;

typedef enum hig_format { HIG_FORMAT_JSON = 0, HIG_FORMAT_CSV = 1, HIG_FORMAT_LATEX = 2 } hig_format;

typedef enum hig_ring { HIG_RING_VAL = 0, HIG_RING_TILDE = 1 } hig_ring;

/* Angularity target: a valuation polynomial p(t, s), or a dual element. */
typedef enum hig_angular_kind { HIG_ANGULAR_VALUATION = 0, HIG_ANGULAR_DUAL = 1 } hig_angular_kind;

/* Rings, bases and multiplication tables for one n. */
typedef struct hig_context hig_context;

HIG_API hig_status hig_context_create(int n, hig_context** out);
HIG_API void hig_context_destroy(hig_context* ctx);
HIG_API int hig_context_n(const hig_context* ctx);

HIG_API const char* hig_last_error(void);
HIG_API const char* hig_status_name(hig_status status);
HIG_API void hig_free_string(char* s);

/* {"val": [...], "tilde": [...], "curv": N} */
HIG_API hig_status hig_dims(const hig_context* ctx, char** out);
/* Basis labels in order. */
HIG_API hig_status hig_basis(const hig_context* ctx, char** out);
HIG_API hig_status hig_reduce(const hig_context* ctx, hig_ring ring, const char* expr, char** out);
HIG_API hig_status hig_mul(const hig_context* ctx, hig_ring ring, const char* a, const char* b,
                           char** out);
/* Product in the dual algebra; operands are dual element expressions. */
HIG_API hig_status hig_dual_mul(const hig_context* ctx, const char* x, const char* y, char** out);
HIG_API hig_status hig_kinematic_local(const hig_context* ctx, hig_format format, char** out);
HIG_API hig_status hig_kinematic_global(const hig_context* ctx, hig_format format, char** out);
HIG_API hig_status hig_globalize(const hig_context* ctx, const char* phi, char** out);
/* Valuation p(t, s) acting on a curvature measure. */
HIG_API hig_status hig_module_mul(const hig_context* ctx, const char* valuation, const char* phi,
                                  char** out);
/* lambda as "p/q". */
HIG_API hig_status hig_tlambda(const hig_context* ctx, const char* lambda, char** out);
/* Element p1 + p2 wbar with p1, p2 polynomials in t, s. */
HIG_API hig_status hig_image_check(const hig_context* ctx, const char* lambda, const char* p1,
                                   const char* p2, char** out);
HIG_API hig_status hig_angular_check(const hig_context* ctx, const char* lambda,
                                     hig_angular_kind kind, const char* expr, char** out);

#ifdef __cplusplus
}
#endif

#endif
