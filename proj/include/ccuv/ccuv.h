#pragma once

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Constacyclic codes of length 2 p^s over
 * F_{p^m} + u F_{p^m} + v F_{p^m} + uv F_{p^m}  (u^2 = v^2 = 0, uv = vu):
 * classification, codeword counts, Hamming / symbol-pair distances, and an
 * independent search oracle that certifies the closed forms.
 *
 * All functions returning int give a CCUV_* status; on failure
 * ccuv_last_error() holds a thread-local message. Strings written through
 * char** out parameters are owned by the caller and released with
 * ccuv_string_free(). Handles are destroyed with their matching _destroy.
 */

enum {
    CCUV_OK = 0,
    CCUV_EINVAL = 1,     /* bad argument or null pointer */
    CCUV_ENOTPRIME = 2,  /* p is not prime */
    CCUV_EEVENPRIME = 3, /* p = 2 is outside the odd-characteristic setting */
    CCUV_EREDUCIBLE = 4, /* supplied modulus polynomial is reducible */
    CCUV_EPARSE = 5,     /* malformed field/ring/poly literal */
    CCUV_ENOTUNIT = 6,   /* alpha (or z form) is not a unit where one is required */
    CCUV_EBOUND = 7,     /* parameter outside its valid interval */
    CCUV_EUNCOVERED = 8, /* no closed form for this unit family; oracle still works */
    CCUV_EBUDGET = 9,    /* witness search budget exhausted before a verdict */
    CCUV_ECAP = 10,      /* code too large to enumerate and no witness bound set */
    CCUV_ENOMEM = 11,
    CCUV_EINTERNAL = 12
};

typedef struct ccuv_field ccuv_field;     /* F_{p^m} plus the length parameter s */
typedef struct ccuv_ambient ccuv_ambient; /* field + unit alpha + derived alpha0 */
typedef struct ccuv_verify ccuv_verify;   /* formula-vs-oracle campaign result */

/* ideal selector: type "A0" | "A1" | "B" | "C" | "D"; z is a polynomial in x
 * over the field ("0", NULL, or e.g. "x^2+2x+1"); unused parameters are 0 */
typedef struct ccuv_spec {
    const char* type;
    int64_t ell;
    int64_t t;
    int64_t mu;
    const char* z;
} ccuv_spec;

/* closed-form answers: codeword count p^eta_exponent, distances, and the
 * derived torsion index im (valid when has_im is nonzero) */
typedef struct ccuv_report {
    int64_t eta_exponent;
    int64_t d_h;
    int64_t d_sp;
    int64_t im;
    int32_t has_im;
    char provenance[192];
} ccuv_report;

/* search-oracle answers; when a distance is not exact the value is a proven
 * lower bound and *_upper is the best weight observed (-1: none seen) */
typedef struct ccuv_oracle_report {
    int64_t rank; /* codeword count is p^rank */
    int32_t exhaustive;
    int32_t d_h_exact;
    int32_t d_sp_exact;
    int64_t d_h;
    int64_t d_sp;
    int64_t d_h_upper;
    int64_t d_sp_upper;
} ccuv_oracle_report;

const char* ccuv_version(void);
const char* ccuv_status_name(int status);
/* message from the most recent failing call on this thread ("" if none) */
const char* ccuv_last_error(void);
void ccuv_string_free(char* s);

/* irreducible: optional monic modulus for F_{p^m}, coefficients c_0..c_m as
 * integers below p (constant term first); pass NULL, 0 to pick the default */
int ccuv_field_create(int64_t p, int32_t m, int32_t s, const uint64_t* irreducible,
                      size_t irreducible_len, ccuv_field** out);
void ccuv_field_destroy(ccuv_field* f);
int ccuv_field_describe(const ccuv_field* f, char** out);

/* alpha literal like "2+v+uv" or "1+(a+1)u"; the field handle is copied and
 * may be destroyed afterwards */
int ccuv_ambient_create(const ccuv_field* f, const char* alpha, ccuv_ambient** out);
void ccuv_ambient_destroy(ccuv_ambient* a);
/* "Square" | "CaseFull" | "CaseNoU" | "CaseNoV-swapped" | "Uncovered" */
const char* ccuv_ambient_family(const ccuv_ambient* a);
int ccuv_classify_render(const ccuv_ambient* a, char** out);

int ccuv_eval(const ccuv_ambient* a, const ccuv_spec* spec, ccuv_report* out);

/* cap: exhaustive enumeration limit and witness node budget; wmax: largest
 * support size the witness search may try when the code exceeds cap (0: off) */
int ccuv_oracle_eval(const ccuv_ambient* a, const ccuv_spec* spec, uint64_t cap, int64_t wmax,
                     ccuv_oracle_report* out);

/* format "md" | "csv" | "json"; policy "zero" | "rep" | "random" (k samples
 * per cell, seeded) */
int ccuv_table_render(const ccuv_ambient* a, const char* format, const char* policy, int32_t k,
                      uint64_t seed, char** out);

/* threads 0 picks the hardware count; wmax 0 uses per-spec defaults */
int ccuv_verify_run(const ccuv_ambient* a, const char* policy, int32_t k, uint64_t seed,
                    uint64_t cap, int64_t wmax, int32_t threads, ccuv_verify** out);
void ccuv_verify_destroy(ccuv_verify* v);
int64_t ccuv_verify_specs(const ccuv_verify* v);
int64_t ccuv_verify_passes(const ccuv_verify* v);
int64_t ccuv_verify_failures(const ccuv_verify* v);
int64_t ccuv_verify_skips(const ccuv_verify* v);
/* format "text" | "json" */
int ccuv_verify_render(const ccuv_verify* v, const char* format, char** out);

#ifdef __cplusplus
}
#endif
