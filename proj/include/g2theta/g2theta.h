#ifndef G2THETA_H
#define G2THETA_H

/* C interface to the genus-2 theta library. Every call returns a status; on
 * failure g2_last_error() holds a message for the calling thread. Strings
 * handed out by the library are released with g2_string_free. */

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define G2_API __declspec(dllexport)
#else
#define G2_API __attribute__((visibility("default")))
#endif

typedef enum g2_status {
    G2_OK = 0,
    G2_NOT_CONVERGENT,
    G2_NEGATIVE_TAU12_IM,
    G2_TOL_TOO_SMALL,
    G2_UNKNOWN_IDENTITY,
    G2_PRECONDITION_VIOLATED,
    G2_DENOMINATOR_NEAR_ZERO,
    G2_POLE_ENCOUNTERED,
    G2_INVALID_CONFIG,
    G2_PARSE_ERROR,
    G2_INVALID_ARGUMENT,
    G2_INTERNAL
} g2_status;

typedef struct g2_complex {
    double re;
    double im;
} g2_complex;

typedef struct g2_period_matrix g2_period_matrix;
typedef struct g2_suite_config g2_suite_config;
typedef struct g2_report g2_report;

G2_API const char* g2_status_name(g2_status status);
G2_API const char* g2_last_error(void);
G2_API void g2_string_free(char* s);

G2_API g2_status g2_parse_complex(const char* text, g2_complex* out);
/* "RE+IMi" with 17 significant digits. */
G2_API g2_status g2_format_complex(g2_complex z, char** out);

G2_API g2_status g2_period_matrix_new(g2_complex tau1, g2_complex tau2, g2_complex tau12, g2_period_matrix** out);
G2_API void g2_period_matrix_free(g2_period_matrix* omega);

/* characteristic is the four-digit text "acbd". */
G2_API g2_status g2_theta(const char* characteristic, g2_complex u, g2_complex v, const g2_period_matrix* omega,
                          double tail_tolerance, g2_complex* out);
G2_API g2_status g2_hyperelliptic_f(const char* characteristic, g2_complex y, g2_complex z,
                                    const g2_period_matrix* omega, double tail_tolerance, g2_complex* out);
/* Six odd half-periods in theta-add-11..16 order. */
G2_API g2_status g2_odd_half_periods(const g2_period_matrix* omega, g2_complex alpha[6], g2_complex beta[6]);

G2_API g2_status g2_catalog_text(char** out);

G2_API g2_status g2_suite_config_new(g2_suite_config** out);
G2_API void g2_suite_config_free(g2_suite_config* config);
/* Comma-separated family names or "all". */
G2_API g2_status g2_suite_config_set_families(g2_suite_config* config, const char* families);
G2_API g2_status g2_suite_config_set_trials(g2_suite_config* config, int trials);
G2_API g2_status g2_suite_config_set_seed(g2_suite_config* config, uint64_t seed);
G2_API g2_status g2_suite_config_set_tol(g2_suite_config* config, double tol);
G2_API g2_status g2_suite_config_set_tail_tolerance(g2_suite_config* config, double tail_tolerance);
G2_API g2_status g2_suite_config_set_family_tol(g2_suite_config* config, const char* family, double tol);
G2_API g2_status g2_suite_config_set_threads(g2_suite_config* config, unsigned threads);

G2_API g2_status g2_run_suite(const g2_suite_config* config, g2_report** out);
G2_API void g2_report_free(g2_report* report);
G2_API int g2_report_passed(const g2_report* report);
G2_API g2_status g2_report_json(const g2_report* report, char** out);
G2_API g2_status g2_report_table(const g2_report* report, char** out);

#ifdef __cplusplus
}
#endif

#endif
