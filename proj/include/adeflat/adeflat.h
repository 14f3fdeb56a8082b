#ifndef ADEFLAT_ADEFLAT_H
#define ADEFLAT_ADEFLAT_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(ADEFLAT_BUILDING_LIBRARY)
#define ADEFLAT_API __attribute__((visibility("default")))
#else
#define ADEFLAT_API
#endif

typedef struct adeflat_context adeflat_context;
typedef struct adeflat_result adeflat_result;

typedef enum adeflat_status {
  ADEFLAT_OK = 0,
  ADEFLAT_E_USAGE = 1,     /* bad class name, argument or option */
  ADEFLAT_E_VERIFY = 2,    /* report produced, but a check or gate failed */
  ADEFLAT_E_ALGEBRA = 3,   /* exact computation refused (singular matrix, bound exceeded, ...) */
  ADEFLAT_E_NUMERIC = 4,   /* oval not found, stencil crosses the discriminant, ... */
  ADEFLAT_E_INTERNAL = 5
} adeflat_status;

ADEFLAT_API const char* adeflat_version(void);
ADEFLAT_API int adeflat_schema_version(void);
ADEFLAT_API const char* adeflat_status_name(adeflat_status s);

ADEFLAT_API adeflat_status adeflat_context_create(adeflat_context** out);
ADEFLAT_API void adeflat_context_destroy(adeflat_context* ctx);
/* Message of the last failed call on this context; empty after a success. */
ADEFLAT_API const char* adeflat_last_error(const adeflat_context* ctx);

/* Keys: tol, seed, convention (corrected|printed), oval, k_max, table_n, product_rule_ell.
   Changing convention drops cached derivations. */
ADEFLAT_API adeflat_status adeflat_set_option(adeflat_context* ctx, const char* key, const char* value);

/* Every runner stores a result in *out unless the status is USAGE, ALGEBRA, NUMERIC or INTERNAL.
   VERIFY still yields a result. Class names: A1.., D4.., E6, E7, E8. */
ADEFLAT_API adeflat_status adeflat_catalog_show(adeflat_context* ctx, const char* cls, adeflat_result** out);
ADEFLAT_API adeflat_status adeflat_flatcoords(adeflat_context* ctx, const char* cls, adeflat_result** out);
ADEFLAT_API adeflat_status adeflat_gm_derive(adeflat_context* ctx, const char* cls, adeflat_result** out);
ADEFLAT_API adeflat_status adeflat_gm_reduce(adeflat_context* ctx, const char* cls, int k1, int k2,
                                             adeflat_result** out);
ADEFLAT_API adeflat_status adeflat_proof_check(adeflat_context* ctx, const char* cls, int K, int samples,
                                               adeflat_result** out);
/* s: comma-separated decimals or p/q in the order s_input_order of catalog show (A2: s10, s00),
   or name=value pairs.  monomials: comma-separated polynomial texts over x, y. */
ADEFLAT_API adeflat_status adeflat_periods_eval(adeflat_context* ctx, const char* cls, const char* s,
                                                const char* monomials, adeflat_result** out);
ADEFLAT_API adeflat_status adeflat_periods_verify(adeflat_context* ctx, const char* cls, const char* s,
                                                  adeflat_result** out);
ADEFLAT_API adeflat_status adeflat_bound(adeflat_context* ctx, const char* cls, int K, adeflat_result** out);

/* JSON Schema of a report kind (catalog, flatcoords, gm_derive, gm_reduce, proof_check,
   periods_eval, periods_verify, bound). The string lives until the next call on ctx. */
ADEFLAT_API adeflat_status adeflat_schema(adeflat_context* ctx, const char* kind, const char** out);
/* Canonical text of a polynomial; the string lives until the next call on ctx. */
ADEFLAT_API adeflat_status adeflat_poly_canonical(adeflat_context* ctx, const char* text, const char** out);

/* Strings returned by result accessors live as long as the result. */
ADEFLAT_API const char* adeflat_result_kind(const adeflat_result* r);
ADEFLAT_API const char* adeflat_result_json(adeflat_result* r, int indent);
ADEFLAT_API int adeflat_result_passed(const adeflat_result* r);
ADEFLAT_API int adeflat_result_csv_count(const adeflat_result* r);
ADEFLAT_API const char* adeflat_result_csv_name(const adeflat_result* r, int i);
ADEFLAT_API const char* adeflat_result_csv_text(const adeflat_result* r, int i);
ADEFLAT_API void adeflat_result_destroy(adeflat_result* r);

#ifdef __cplusplus
}
#endif

#endif
