/* C interface to the exact twisted multiple zeta value engine.
 *
 * All functions return a status code; results come back as heap strings the
 * caller releases with mzv_string_free(). A nonnull out_error receives a
 * diagnostic message on failure (also to be freed). Handles are opaque and
 * freed with their matching *_free function. The library keeps no global
 * state, so handles may be used from multiple threads.
 */
#ifndef MZV_H
#define MZV_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct mzv_spec_s mzv_spec;

enum {
    MZV_OK = 0,
    MZV_EPARSE = 1,      /* malformed input (JSON, polynomial, expression) */
    MZV_EVALIDATION = 2, /* well-formed but not certified / inconsistent */
    MZV_ECROSSCHECK = 3, /* two value paths disagreed */
    MZV_EUNSUPPORTED = 4, /* shape or argument outside the supported domain */
    MZV_ERESOURCE = 5,   /* expansion cap exceeded */
    MZV_EINTERNAL = 6
};

const char* mzv_version(void);
void mzv_string_free(char* s);

/* --- problem specifications ------------------------------------------- */

int mzv_spec_parse(const char* json_text, mzv_spec** out_spec, char** out_error);
void mzv_spec_free(mzv_spec* spec);

/* Validation report ("valid; abscissa bound Re s_T > ..." or error lines). */
int mzv_spec_check(const mzv_spec* spec, char** out_report, char** out_error);

/* The spec file's option block (defaults if absent). Out-pointers nullable. */
int mzv_spec_options(const mzv_spec* spec, int* out_simplify, int* out_numeric,
                     double* out_tolerance);

/* Exact value at s = -N. path is "auto", "d1", "d2" or "general"; "auto"
 * cross-checks the general formula against a shape-compatible specialized
 * one and fails with MZV_ECROSSCHECK on disagreement. simplify folds known
 * closed forms into pi powers: 1 forces it, 0 disables it, -1 follows the
 * spec file's option. out_trace (nullable) receives the per-term JSON log. */
int mzv_value_at(const mzv_spec* spec, const long long* N, size_t n_len, const char* path,
                 int simplify, char** out_value, char** out_trace, char** out_error);

/* Float render of the same value; fails if opaque atoms remain. */
int mzv_value_numeric(const mzv_spec* spec, const long long* N, size_t n_len, const char* path,
                      double* out_re, double* out_im, char** out_error);

/* --- fully twisted values ---------------------------------------------- */

/* json_text: {"polys": [...], "k": [...] | "args": [...], "twists": [...]} */
int mzv_dc_eval(const char* json_text, char** out_value, char** out_error);

/* --- Lerch values ------------------------------------------------------- */

/* Exact zeta_mu(arg) for arg <= 0, canonical scalar text. */
int mzv_lerch_exact(long mu_num, long mu_den, long long arg, char** out_value, char** out_error);

/* Decimal render of the same exact value. */
int mzv_lerch_exact_eval(long mu_num, long mu_den, long long arg, double* out_re, double* out_im,
                         char** out_error);

/* Numeric zeta_mu(arg) for arg >= 1. */
int mzv_lerch_numeric(long mu_num, long mu_den, long long arg, double* out_re, double* out_im,
                      char** out_error);

/* --- singularity candidates --------------------------------------------- */

/* lo/hi are rationals in "p/q" form; JSON report sorted by s_T descending. */
int mzv_singularities(const mzv_spec* spec, const char* lo, const char* hi, int max_index,
                      char** out_json, char** out_error);

/* --- numeric oracles ----------------------------------------------------- */

/* One-variable continuation of sum P(m)^{-s}; result as OracleResult JSON. */
int mzv_oracle_n1(const char* poly_text, double s_re, double s_im, int cutoff, int order,
                  char** out_json, char** out_error);

int mzv_oracle_mb(double s_re, double s_im, double lam_re, double lam_im, double c, double height,
                  double* out_residual, char** out_error);

/* lam arrays hold lam_0..lam_r; rhos holds rho_1..rho_r (r = n_lam - 1 <= 2). */
int mzv_oracle_mmb(double s_re, double s_im, const double* lam_re, const double* lam_im,
                   size_t n_lam, const double* rhos, size_t n_rho, double height,
                   double* out_residual, char** out_error);

/* s arrays hold one entry per polynomial; OracleResult JSON. */
int mzv_oracle_factorized(const mzv_spec* spec, const double* s_re, const double* s_im,
                          size_t s_len, char** out_json, char** out_error);

/* --- expression round trip ----------------------------------------------- */

/* Parses a rendered value expression and re-renders it canonically. */
int mzv_value_expr_canonical(const char* text, char** out_canonical, char** out_error);

#ifdef __cplusplus
}
#endif

#endif /* MZV_H */
