/*
 * C interface to the gwcell calculator.
 *
 * Every call takes an opaque context, returns a gwcell_status and, on
 * success, hands back a heap string (JSON or text) that the caller releases
 * with gwcell_string_free. On failure *out is set to NULL and
 * gwcell_last_error(ctx) describes the problem. A context may be shared by
 * several threads; the last-error text is per context, so give each thread
 * its own context if it needs reliable error messages.
 */
#ifndef GWCELL_H
#define GWCELL_H

#include <stdint.h>

#if defined(_WIN32)
#define GWCELL_API __declspec(dllexport)
#else
#define GWCELL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct gwcell_context gwcell_context;

typedef enum gwcell_status {
  GWCELL_OK = 0,
  GWCELL_ERR_INVALID_ARGUMENT = 1, /* null pointer, unknown option string */
  GWCELL_ERR_DOMAIN = 2,           /* mathematically invalid query or input file */
  GWCELL_ERR_MISSING_KEYS = 3,     /* base-theory table lacks requested entries */
  GWCELL_ERR_VERIFICATION = 4,     /* verification ran and some check failed */
  GWCELL_ERR_INTERNAL = 5
} gwcell_status;

typedef enum gwcell_format { GWCELL_FORMAT_JSON = 0, GWCELL_FORMAT_TEXT = 1 } gwcell_format;

GWCELL_API gwcell_status gwcell_context_create(gwcell_context** out);
GWCELL_API void gwcell_context_destroy(gwcell_context* ctx);

/* Message of the most recent failure on ctx, "" if none. Owned by ctx. */
GWCELL_API const char* gwcell_last_error(const gwcell_context* ctx);
GWCELL_API const char* gwcell_status_string(gwcell_status status);
GWCELL_API void gwcell_string_free(char* s);

/*
 * Grassmannian Gr_d of a rank d+m bundle.
 *   twist:  "even" (L), "odd" (L + Delta_d), "both" (total group), or a
 *           generator list such as "L,Delta" or "L,q3,Delta:2".
 *   mode:   "formal", "witt", or "eval" (needs base_table_path; the result is
 *           the evaluated group in the given degree).
 *   bundle: "trivial" or "flagged".
 */
GWCELL_API gwcell_status gwcell_grassmann(gwcell_context* ctx, int d, int m, int64_t shift, const char* twist,
                                          const char* mode, const char* bundle, const char* base_table_path,
                                          int64_t degree, gwcell_format format, char** out);

/* Projective bundle P(E), rank E = r + 1. split = 0 for odd r and even twist
 * yields the long exact sequence instead of a direct sum. */
GWCELL_API gwcell_status gwcell_projective_bundle(gwcell_context* ctx, int r, int twist_parity, int64_t shift,
                                                  int split, gwcell_format format, char** out);

/* Young diagrams of a d x m frame. render: "json" or "ascii". */
GWCELL_API gwcell_status gwcell_young(gwcell_context* ctx, int d, int m, int even_only, const char* render,
                                      char** out);

/* Exact sequence of P(E) for odd r in the even twisted case. */
GWCELL_API gwcell_status gwcell_les(gwcell_context* ctx, int r, int64_t shift, gwcell_format format, char** out);

/* Runs the verification suite. Returns GWCELL_ERR_VERIFICATION (with the
 * report in *out) if any check fails. */
GWCELL_API gwcell_status gwcell_verify(gwcell_context* ctx, int d_max, int m_max, gwcell_format format,
                                       char** out);

#ifdef __cplusplus
}
#endif

#endif /* GWCELL_H */
