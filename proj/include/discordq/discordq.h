/* C interface to the discordq library.
 *
 * Every function returns a dq_status. On failure the thread-local message
 * returned by dq_last_error() describes the problem; outputs are left
 * untouched. Quadratures use x = (a + a^dag)/2, p = -i(a - a^dag)/2, so the
 * vacuum has variance 1/4.
 */
#ifndef DISCORDQ_H
#define DISCORDQ_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(DISCORDQ_BUILDING_LIBRARY)
#    define DQ_API __declspec(dllexport)
#  else
#    define DQ_API __declspec(dllimport)
#  endif
#else
#  define DQ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dq_status {
  DQ_OK = 0,
  DQ_INVALID_ARGUMENT = 1,
  DQ_NON_PHYSICAL = 2,
  DQ_DEGENERATE_INVARIANTS = 3,
  DQ_SINGULAR_COVARIANCE = 4,
  DQ_PARAM_MISMATCH = 5,
  DQ_DEGENERATE = 6,
  DQ_DIVERGENT = 7,
  DQ_ILL_CONDITIONED = 8,
  DQ_COMPLEX_RESIDUE = 9,
  DQ_TRUNCATION_ERROR = 10,
  DQ_NON_CONVERGED = 11,
  DQ_PARSE_ERROR = 12,
  DQ_INTERNAL = 100
} dq_status;

DQ_API const char* dq_status_string(dq_status status);
/* Message of the last failed call on this thread; "" if none. */
DQ_API const char* dq_last_error(void);
DQ_API const char* dq_version(void);

/* ------------------------------------------------------------------------ */
/* Covariance data */

/* Standard form: A = diag(a, a), B = diag(b, b), C = diag(c1, c2). */
typedef struct dq_params {
  double a, b, c1, c2;
} dq_params;

/* Row-major 4x4 over (x1, p1, x2, p2). */
typedef struct dq_covariance {
  double v[16];
} dq_covariance;

typedef enum dq_violation {
  DQ_VIOLATION_ASYMMETRIC = 0,
  DQ_VIOLATION_NON_FINITE,
  DQ_VIOLATION_UNCERTAINTY,
  DQ_VIOLATION_SUB_VACUUM_A,
  DQ_VIOLATION_SUB_VACUUM_B,
  DQ_VIOLATION_CORRELATION_C1,
  DQ_VIOLATION_CORRELATION_C2
} dq_violation;

#define DQ_MAX_VIOLATIONS 8

typedef struct dq_validation {
  int valid;
  int count;
  dq_violation kinds[DQ_MAX_VIOLATIONS];
  double margins[DQ_MAX_VIOLATIONS];
} dq_validation;

/* Short description such as "a < 1/4". */
DQ_API const char* dq_violation_string(dq_violation v);

DQ_API dq_status dq_validate_covariance(const dq_covariance* v, dq_validation* out);
DQ_API dq_status dq_validate_params(const dq_params* p, dq_validation* out);
DQ_API dq_status dq_standard_form_reduce(const dq_covariance* v, dq_params* out);
DQ_API dq_status dq_params_covariance(const dq_params* p, dq_covariance* out);
DQ_API dq_status dq_squeezed_thermal_params(double n, double r, dq_params* out);
/* {"V": [[...] x4]} */
DQ_API dq_status dq_covariance_from_json(const char* text, dq_covariance* out);

/* ------------------------------------------------------------------------ */
/* Reports */

typedef enum dq_method {
  DQ_METHOD_CLOSED_GAUSSIAN = 0,
  DQ_METHOD_GENERAL_WIGNER = 1,
  DQ_METHOD_FOCK_ORACLE = 2
} dq_method;

DQ_API const char* dq_method_string(dq_method m);

typedef struct dq_report {
  double q;
  double term1;
  double term2;
  dq_method method;
  double max_condition;
  size_t tuple_count;
  size_t monomial_count;
  double imag_residue;
  int fock_dim_a;
  int fock_dim_b;
  double trace_deficit;
} dq_report;

#define DQ_DEFAULT_THRESHOLD 1e-9

/* *nonzero = q > threshold. */
DQ_API dq_status dq_classify(double q, double threshold, int* nonzero);

/* ------------------------------------------------------------------------ */
/* Closed forms */

DQ_API dq_status dq_q_gaussian_closed(const dq_params* p, dq_report* out);
/* *zero = c1^2 + c2^2 <= tol; *q receives the closed-form value. */
DQ_API dq_status dq_gaussian_zero_discord(const dq_params* p, double tol, int* zero, double* q);
DQ_API dq_status dq_q_squeezed_thermal_closed(double n, double r, double* q);
DQ_API dq_status dq_q_photon_mixed_closed(double k, double* q);
DQ_API dq_status dq_q_mixture_closed(double k, const dq_params* p, double* q);
DQ_API dq_status dq_q_photon_added_n0(double r, double* q);
DQ_API dq_status dq_sign_analysis_f(const dq_params* p, double* f);

/* ------------------------------------------------------------------------ */
/* Wigner states */

typedef struct dq_state dq_state;

DQ_API dq_status dq_state_gaussian(const dq_params* p, dq_state** out);
DQ_API dq_status dq_state_covariance(const dq_covariance* v, dq_state** out);
DQ_API dq_status dq_state_squeezed_thermal(double n, double r, dq_state** out);
DQ_API dq_status dq_state_photon_mixed(double k, dq_state** out);
DQ_API dq_status dq_state_gaussian_vacuum_mix(double k, const dq_params* p, dq_state** out);
DQ_API dq_status dq_state_photon_added(double n, double r, dq_state** out);
DQ_API dq_status dq_state_from_json(const char* text, dq_state** out);
/* *out must be released with dq_string_free. */
DQ_API dq_status dq_state_to_json(const dq_state* s, char** out);
DQ_API void dq_state_free(dq_state* s);
DQ_API void dq_string_free(char* s);

DQ_API dq_status dq_state_eval(const dq_state* s, const double point[4], double* out);
DQ_API dq_status dq_state_normalization(const dq_state* s, double* out);
DQ_API dq_status dq_state_purity(const dq_state* s, double* out);
DQ_API dq_status dq_q_general(const dq_state* s, dq_report* out);

/* ------------------------------------------------------------------------ */
/* Truncated Fock basis */

typedef struct dq_fock_state dq_fock_state;

#define DQ_DEFAULT_FOCK_DIM 16
#define DQ_DEFAULT_MAX_DEFICIT 1e-6

DQ_API dq_status dq_fock_squeezed_thermal(double n, double r, int dim, double max_deficit, dq_fock_state** out);
DQ_API dq_status dq_fock_photon_mixed(double k, dq_fock_state** out);
DQ_API dq_status dq_fock_photon_added(double n, double r, int dim, double max_deficit, dq_fock_state** out);
DQ_API dq_status dq_fock_gaussian_vacuum_mix(double k, double n, double r, int dim, double max_deficit,
                                            dq_fock_state** out);
DQ_API void dq_fock_free(dq_fock_state* s);
DQ_API dq_status dq_fock_q(const dq_fock_state* s, dq_report* out);

/* Evaluates the squeezed thermal state at each of the increasing dims.
 * history receives ndims values (may be NULL). Returns DQ_NON_CONVERGED,
 * with history filled, when the last two differ by more than rel_tol. */
DQ_API dq_status dq_fock_converge_squeezed_thermal(double n, double r, const int* dims, size_t ndims,
                                                  double rel_tol, double max_deficit, double* q,
                                                  double* history);

/* ------------------------------------------------------------------------ */
/* Scans */

typedef struct dq_grid {
  double start;
  double stop;
  size_t count;
} dq_grid;

/* "start:stop:count", inclusive endpoints. */
DQ_API dq_status dq_grid_parse(const char* text, dq_grid* out);

#define DQ_MESSAGE_SIZE 256

typedef struct dq_scan_row {
  double n;
  double r;
  double q;
  double log10_q; /* log10(max(q, 1e-300)) */
  int ok;
  dq_status error;
  char message[DQ_MESSAGE_SIZE];
} dq_scan_row;

/* Photon-added squeezed thermal states over n_grid x r_grid, n-major.
 * rows must hold n_grid->count * r_grid->count entries; *count receives the
 * number written. threads == 0 uses every hardware thread. */
DQ_API dq_status dq_scan_photon_added(const dq_grid* n_grid, const dq_grid* r_grid, unsigned threads,
                                     dq_scan_row* rows, size_t capacity, size_t* count);

/* ------------------------------------------------------------------------ */
/* Cross-evaluator verification */

typedef struct dq_verify_config {
  double threshold;
  int fock_dim;
  unsigned threads;
} dq_verify_config;

/* Pointers are valid only for the duration of the callback. */
typedef struct dq_check_result {
  const char* name;
  int passed;
  const char* detail;
  double seconds;
} dq_check_result;

typedef void (*dq_check_callback)(const dq_check_result* result, void* user);

DQ_API void dq_verify_config_default(dq_verify_config* cfg);
DQ_API dq_status dq_verify(const dq_verify_config* cfg, dq_check_callback callback, void* user,
                          int* all_passed);

#ifdef __cplusplus
}
#endif

#endif /* DISCORDQ_H */
