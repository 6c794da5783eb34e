#include "parabose/parabose.h"

#include <algorithm>
#include <exception>
#include <new>
#include <string>

#include "app/commands.hpp"
#include "parabose/completeness.hpp"
#include "parabose/error.hpp"
#include "parabose/observables.hpp"
#include "parabose/specfun.hpp"
#include "parabose/states.hpp"

struct pb_session {
    parabose::app::ScenarioConfig config;
    std::uint64_t seed = 1;
    std::string report;
};

namespace {

thread_local std::string last_error;

pb_status status_of(parabose::ErrorKind kind) {
    using parabose::ErrorKind;
    switch (kind) {
    case ErrorKind::domain:
    case ErrorKind::quantization:
    case ErrorKind::mapping: return PB_ERR_DOMAIN;
    case ErrorKind::configuration:
    case ErrorKind::schedule: return PB_ERR_CONFIG;
    case ErrorKind::truncation:
    case ErrorKind::tail_mass: return PB_ERR_TRUNCATION;
    case ErrorKind::norm_drift:
    case ErrorKind::step_halving:
    case ErrorKind::mu_drift:
    case ErrorKind::crossing:
    case ErrorKind::squeeze_blowup:
    case ErrorKind::quadrature: return PB_ERR_CONVERGENCE;
    case ErrorKind::overflow: return PB_ERR_OVERFLOW;
    case ErrorKind::io: return PB_ERR_IO;
    }
    return PB_ERR_INTERNAL;
}

template <class F>
pb_status guarded(F&& body) {
    last_error.clear();
    try {
        return body();
    } catch (const parabose::Error& e) {
        last_error = std::string(parabose::to_string(e.kind())) + ": " + e.what();
        return status_of(e.kind());
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return PB_ERR_INTERNAL;
    } catch (const std::exception& e) {
        last_error = e.what();
        return PB_ERR_INTERNAL;
    } catch (...) {
        last_error = "unknown failure";
        return PB_ERR_INTERNAL;
    }
}

pb_status invalid(const char* what) {
    last_error = what;
    return PB_ERR_INVALID_ARGUMENT;
}

}  // namespace

extern "C" {

const char* pb_version(void) { return "1.0.0"; }

const char* pb_status_string(pb_status status) {
    switch (status) {
    case PB_OK: return "ok";
    case PB_ERR_DOMAIN: return "domain error";
    case PB_ERR_CONFIG: return "configuration error";
    case PB_ERR_TRUNCATION: return "truncation error";
    case PB_ERR_CONVERGENCE: return "convergence error";
    case PB_ERR_OVERFLOW: return "overflow";
    case PB_ERR_IO: return "i/o error";
    case PB_ERR_CHECK_FAILED: return "check failed";
    case PB_ERR_INVALID_ARGUMENT: return "invalid argument";
    case PB_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* pb_last_error(void) { return last_error.c_str(); }

pb_status pb_session_create(pb_session** out) {
    if (!out) return invalid("null output pointer");
    return guarded([&] {
        *out = new pb_session();
        return PB_OK;
    });
}

void pb_session_destroy(pb_session* session) { delete session; }

pb_status pb_session_load_config(pb_session* session, const char* path) {
    if (!session || !path) return invalid("null session or path");
    return guarded([&] {
        session->config = parabose::app::ScenarioConfig::load(path);
        return PB_OK;
    });
}

pb_status pb_session_load_config_text(pb_session* session, const char* text) {
    if (!session || !text) return invalid("null session or text");
    return guarded([&] {
        session->config = parabose::app::ScenarioConfig::parse(text);
        return PB_OK;
    });
}

pb_status pb_session_set(pb_session* session, const char* assignment) {
    if (!session || !assignment) return invalid("null session or assignment");
    return guarded([&] {
        session->config.set(std::string(assignment));
        return PB_OK;
    });
}

pb_status pb_session_set_seed(pb_session* session, uint64_t seed) {
    if (!session) return invalid("null session");
    session->seed = seed;
    return PB_OK;
}

pb_status pb_session_run(pb_session* session, const char* command, const char* out_dir) {
    if (!session || !command) return invalid("null session or command");
    session->report.clear();
    return guarded([&] {
        const auto r = parabose::app::run_command(command, session->config, out_dir ? out_dir : "", session->seed);
        session->report = r.report;
        if (r.exit_code != 0) {
            last_error = "verification failed";
            return PB_ERR_CHECK_FAILED;
        }
        return PB_OK;
    });
}

const char* pb_session_report(const pb_session* session) { return session ? session->report.c_str() : ""; }

pb_status pb_log_gamma(double x, double* out) {
    if (!out) return invalid("null output pointer");
    return guarded([&] {
        if (!(x > 0.0)) parabose::raise(parabose::ErrorKind::domain, "log_gamma needs x > 0");
        *out = parabose::specfun::log_gamma(x);
        return PB_OK;
    });
}

pb_status pb_bessel_i(double kappa, double z_re, double z_im, double* out_re, double* out_im) {
    if (!out_re || !out_im) return invalid("null output pointer");
    return guarded([&] {
        const auto v = parabose::specfun::bessel_i(parabose::specfun::RealOrder{kappa}, {z_re, z_im});
        *out_re = v.real();
        *out_im = v.imag();
        return PB_OK;
    });
}

pb_status pb_laguerre(int n, double alpha, double x_re, double x_im, double* out_re, double* out_im) {
    if (!out_re || !out_im) return invalid("null output pointer");
    return guarded([&] {
        const auto v = parabose::specfun::laguerre(n, parabose::specfun::RealOrder{alpha}, {x_re, x_im});
        *out_re = v.real();
        *out_im = v.imag();
        return PB_OK;
    });
}

pb_status pb_svs_transition(double zeta_re, double zeta_im, double epsilon, size_t n, double* out) {
    if (!out) return invalid("null output pointer");
    return guarded([&] {
        *out = parabose::svs_transition({zeta_re, zeta_im}, epsilon, n);
        return PB_OK;
    });
}

pb_status pb_cs_transition(double zeta_re, double zeta_im, double xi_re, double xi_im, double epsilon, size_t n,
                           double* out) {
    if (!out) return invalid("null output pointer");
    return guarded([&] {
        *out = parabose::cs_transition({zeta_re, zeta_im}, {xi_re, xi_im}, epsilon, n);
        return PB_OK;
    });
}

pb_status pb_mean_reflection(double zeta_re, double zeta_im, double xi_re, double xi_im, double epsilon, double* out) {
    if (!out) return invalid("null output pointer");
    return guarded([&] {
        *out = parabose::mean_reflection({zeta_re, zeta_im}, {xi_re, xi_im}, epsilon);
        return PB_OK;
    });
}

pb_status pb_cs_amplitudes(double zeta_re, double zeta_im, double xi_re, double xi_im, double epsilon, double theta,
                           size_t requested, double* out, size_t capacity, size_t* truncation) {
    if (!truncation || (capacity > 0 && !out)) return invalid("null output pointer");
    return guarded([&] {
        const parabose::CsSpec spec{{zeta_re, zeta_im}, {xi_re, xi_im}, epsilon, theta};
        const std::size_t need = std::max(requested, parabose::cs_required_truncation(spec));
        const parabose::FockVector v = parabose::cs_amplitudes(spec, need);
        *truncation = v.truncation();
        for (std::size_t k = 0; k < std::min(capacity, v.truncation()); ++k) {
            out[2 * k] = v.amplitudes[static_cast<Eigen::Index>(k)].real();
            out[2 * k + 1] = v.amplitudes[static_cast<Eigen::Index>(k)].imag();
        }
        return PB_OK;
    });
}

pb_status pb_cs_moments(double zeta_re, double zeta_im, double xi_re, double xi_im, double epsilon, double l,
                        double hbar, double* out) {
    if (!out) return invalid("null output pointer");
    return guarded([&] {
        const auto p = parabose::AlgebraParams::from_epsilon(epsilon, l, hbar);
        const auto m = parabose::cs_moments(parabose::CsSpec{{zeta_re, zeta_im}, {xi_re, xi_im}, epsilon, 0.0}, p);
        const double vals[6] = {m.mean_x, m.mean_p, m.var_x, m.var_p, m.cov_xp, m.mean_r};
        for (int i = 0; i < 6; ++i) out[i] = vals[i];
        return PB_OK;
    });
}

pb_status pb_completeness_weight(double epsilon, double r, double* out) {
    if (!out) return invalid("null output pointer");
    return guarded([&] {
        *out = parabose::weight(epsilon, r);
        return PB_OK;
    });
}

}  // extern "C"
