/* C interface to the parabose library. All functions are thread-compatible; a session must not be shared
 * between threads without external locking. Returned strings stay valid until the next call on the same
 * session (session strings) or on the same thread (pb_last_error). */
#ifndef PARABOSE_PARABOSE_H
#define PARABOSE_PARABOSE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define PB_API __declspec(dllexport)
#else
#define PB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct pb_session pb_session;

typedef enum pb_status {
    PB_OK = 0,
    PB_ERR_DOMAIN = 1,
    PB_ERR_CONFIG = 2,
    PB_ERR_TRUNCATION = 3,
    PB_ERR_CONVERGENCE = 4,
    PB_ERR_OVERFLOW = 5,
    PB_ERR_IO = 6,
    PB_ERR_CHECK_FAILED = 7,
    PB_ERR_INVALID_ARGUMENT = 8,
    PB_ERR_INTERNAL = 9
} pb_status;

PB_API const char* pb_version(void);
PB_API const char* pb_status_string(pb_status status);
/* Message of the last failing call on this thread, "" if none. */
PB_API const char* pb_last_error(void);

PB_API pb_status pb_session_create(pb_session** out);
PB_API void pb_session_destroy(pb_session* session);
PB_API pb_status pb_session_load_config(pb_session* session, const char* path);
PB_API pb_status pb_session_load_config_text(pb_session* session, const char* text);
/* "key=value" override, applied after any config file. */
PB_API pb_status pb_session_set(pb_session* session, const char* assignment);
PB_API pb_status pb_session_set_seed(pb_session* session, uint64_t seed);
/* Runs svs-prob, cs-prob, density, weight, oscillator, verify or evolve. out_dir may be NULL to use
 * output.dir. Returns PB_ERR_CHECK_FAILED when verify finds a failing check. */
PB_API pb_status pb_session_run(pb_session* session, const char* command, const char* out_dir);
/* Text report of the last run. */
PB_API const char* pb_session_report(const pb_session* session);

PB_API pb_status pb_log_gamma(double x, double* out);
PB_API pb_status pb_bessel_i(double kappa, double z_re, double z_im, double* out_re, double* out_im);
PB_API pb_status pb_laguerre(int n, double alpha, double x_re, double x_im, double* out_re, double* out_im);
PB_API pb_status pb_svs_transition(double zeta_re, double zeta_im, double epsilon, size_t n, double* out);
PB_API pb_status pb_cs_transition(double zeta_re, double zeta_im, double xi_re, double xi_im, double epsilon, size_t n,
                                  double* out);
PB_API pb_status pb_mean_reflection(double zeta_re, double zeta_im, double xi_re, double xi_im, double epsilon,
                                    double* out);
/* Writes min(capacity, N) interleaved (re, im) pairs into out and N into *truncation, where N is the
 * required truncation (or `requested` if larger). */
PB_API pb_status pb_cs_amplitudes(double zeta_re, double zeta_im, double xi_re, double xi_im, double epsilon,
                                  double theta, size_t requested, double* out, size_t capacity, size_t* truncation);
/* out[0..5] = mean x, mean P, var x, var P, cov xP, mean R. */
PB_API pb_status pb_cs_moments(double zeta_re, double zeta_im, double xi_re, double xi_im, double epsilon, double l,
                               double hbar, double* out);
PB_API pb_status pb_completeness_weight(double epsilon, double r, double* out);

#ifdef __cplusplus
}
#endif

#endif
