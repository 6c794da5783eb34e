#include "parabose/oscillator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "parabose/error.hpp"
#include "parabose/specfun.hpp"

namespace parabose {

namespace {

using specfun::log_gamma;

double arg_from_above(cd z) {
    if (z.imag() == 0.0) return std::arg(cd(z.real(), 0.0));
    return std::arg(z);
}

double theta_zeta(const OscillatorConfig& cfg) { return cfg.zeta0 == cd(0.0, 0.0) ? 0.0 : std::arg(cfg.zeta0); }

double reflection(const OscillatorConfig& cfg) { return mean_reflection(cfg.zeta0, cfg.xi0, cfg.epsilon()); }

double heisenberg_factor(const OscillatorConfig& cfg, double t) {
    const double z = std::abs(cfg.zeta0);
    const double om = (1.0 - z) * (1.0 + z);
    const double s = std::sin(theta_zeta(cfg) - 2.0 * cfg.omega0 * t);
    return std::sqrt(1.0 + 4.0 * z * z * s * s / (om * om));
}

// ln |Z^n L_n^kappa(X/Z)|^2, with a direct series in Z when Z is tiny.
double log_scaled_laguerre_sq(std::size_t n, double kappa, cd x, double z) {
    const double nn = double(n);
    if (z >= 1e-4) {
        const cd lag = specfun::laguerre(static_cast<int>(n), specfun::RealOrder{kappa}, x / z);
        return 2.0 * (nn * std::log(z) + std::log(std::abs(lag)));
    }
    const double lx = std::log(std::abs(x));
    const double lz = std::log(z);
    const double base = log_gamma(nn + kappa + 1.0);
    std::vector<double> logs(n + 1);
    double top = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k <= n; ++k) {
        const double kk = double(k);
        double lt = base - log_gamma(nn - kk + 1.0) - log_gamma(kk + kappa + 1.0) - log_gamma(kk + 1.0);
        if (k > 0) lt += kk * lx;
        if (k < n) lt += (nn - kk) * lz;
        logs[k] = lt;
        top = std::max(top, lt);
    }
    if (!std::isfinite(top)) return -std::numeric_limits<double>::infinity();
    const double step = x == cd(0.0, 0.0) ? 0.0 : std::arg(-x);
    cd sum;
    for (std::size_t k = 0; k <= n; ++k) sum += std::polar(std::exp(logs[k] - top), double(k) * step);
    return 2.0 * (top + std::log(std::abs(sum)));
}

}  // namespace

OscillatorConfig OscillatorConfig::polar(double omega0, int ell, double zeta_abs, double zeta_arg, double xi_abs,
                                         double xi_arg, double l, double hbar) {
    OscillatorConfig cfg;
    cfg.omega0 = omega0;
    cfg.ell = ell;
    cfg.zeta0 = std::polar(zeta_abs, zeta_arg);
    cfg.xi0 = std::polar(xi_abs, xi_arg);
    cfg.l = l;
    cfg.hbar = hbar;
    cfg.validate();
    return cfg;
}

AlgebraParams OscillatorConfig::algebra() const {
    validate();
    return AlgebraParams::from_ell(ell, l, hbar);
}

void OscillatorConfig::validate() const {
    if (!(omega0 > 0.0) || !std::isfinite(omega0)) raise(ErrorKind::domain, "omega0 must be positive");
    if (ell < 0) raise(ErrorKind::quantization, "ell must be a nonnegative integer");
    if (!(std::abs(zeta0) < 1.0)) raise(ErrorKind::domain, "|zeta0| must be below 1");
    if (!std::isfinite(xi0.real()) || !std::isfinite(xi0.imag())) raise(ErrorKind::domain, "xi0 must be finite");
    if (!(l > 0.0) || !std::isfinite(l)) raise(ErrorKind::domain, "l must be positive");
    if (!(hbar > 0.0) || !std::isfinite(hbar)) raise(ErrorKind::domain, "hbar must be positive");
}

StateParams closed_form_parameters(const OscillatorConfig& cfg, double t) {
    cfg.validate();
    const double w = cfg.omega0;
    StateParams s;
    s.zeta = cfg.zeta0 * std::polar(1.0, -2.0 * w * t);
    s.xi = cfg.xi0 * std::polar(1.0, -w * t);
    s.z_eigen = cfg.xi0;
    s.theta_svs = -cfg.epsilon() * w * t;
    s.theta_cs = -w * t;
    return s;
}

CsSpec state_spec(const OscillatorConfig& cfg, double t) {
    const StateParams s = closed_form_parameters(cfg, t);
    return CsSpec{s.zeta, s.xi, cfg.epsilon(), s.theta_cs};
}

FockVector analytic_state(const OscillatorConfig& cfg, double t, std::size_t truncation) {
    const CsSpec spec = state_spec(cfg, t);
    FockVector v = cs_amplitudes(spec, truncation);
    if (cfg.xi0 != cd(0.0, 0.0)) {
        const double continued = arg_from_above(cfg.xi0) - cfg.omega0 * t;
        const double shift = (cfg.epsilon() - 1.0) * (continued - arg_from_above(spec.xi));
        v.amplitudes *= std::polar(1.0, shift);
    }
    return v;
}

PhaseSpacePoint initial_means(const OscillatorConfig& cfg) {
    cfg.validate();
    const double z = std::abs(cfg.zeta0);
    const double om = (1.0 - z) * (1.0 + z);
    const double a = std::abs(cfg.xi0);
    const double tx = cfg.xi0 == cd(0.0, 0.0) ? 0.0 : std::arg(cfg.xi0);
    const double tz = theta_zeta(cfg);
    const double mw = cfg.mass() * cfg.omega0;
    return {std::numbers::sqrt2 * cfg.l * a * (std::cos(tx) - z * std::cos(tx - tz)) / om,
            std::numbers::sqrt2 * cfg.l * mw * a * (std::sin(tx) + z * std::sin(tx - tz)) / om};
}

PhaseSpacePoint mean_trajectories(const OscillatorConfig& cfg, double t) {
    const PhaseSpacePoint p0 = initial_means(cfg);
    const double mw = cfg.mass() * cfg.omega0;
    const double c = std::cos(cfg.omega0 * t);
    const double s = std::sin(cfg.omega0 * t);
    return {p0.x * c + p0.p / mw * s, p0.p * c - mw * p0.x * s};
}

UncertaintyPoint uncertainty_at(const OscillatorConfig& cfg, double t) {
    const Moments m = cs_moments(state_spec(cfg, t), cfg.algebra());
    UncertaintyPoint u;
    u.mean_r = reflection(cfg);
    const double gain = 1.0 + 4.0 * cfg.ell * u.mean_r;
    u.sigma_x = std::sqrt(m.var_x);
    u.sigma_p = std::sqrt(m.var_p);
    u.heisenberg = 0.5 * cfg.hbar * heisenberg_factor(cfg, t) * gain;
    u.sr = 0.25 * cfg.hbar * cfg.hbar * gain * gain;
    return u;
}

std::vector<double> minima_times(const OscillatorConfig& cfg, double t0, double t1) {
    cfg.validate();
    if (!(t1 >= t0)) raise(ErrorKind::configuration, "time window must satisfy t0 <= t1");
    const double th = theta_zeta(cfg);
    const double w = cfg.omega0;
    const auto k_hi = static_cast<long long>(std::floor((th - 2.0 * w * t0) / std::numbers::pi));
    const auto k_lo = static_cast<long long>(std::ceil((th - 2.0 * w * t1) / std::numbers::pi));
    std::vector<double> out;
    for (long long k = k_hi; k >= k_lo; --k) {
        const double t = (th - double(k) * std::numbers::pi) / (2.0 * w);
        if (t >= t0 && t <= t1) out.push_back(t);
    }
    return out;
}

double calibrate_l(double sigma_x0, const OscillatorConfig& cfg) {
    if (!(sigma_x0 > 0.0) || !std::isfinite(sigma_x0)) raise(ErrorKind::domain, "sigma_x0 must be positive");
    if (cfg.zeta0.imag() != 0.0) raise(ErrorKind::domain, "calibration assumes a real zeta0");
    const double z = cfg.zeta0.real();
    if (!(std::abs(z) < 1.0)) raise(ErrorKind::domain, "|zeta0| must be below 1");
    const double gain = 1.0 + 4.0 * cfg.ell * mean_reflection(cfg.zeta0, cfg.xi0, cfg.epsilon());
    const double l = sigma_x0 * std::sqrt((1.0 + z) / (1.0 - z) * 2.0 / gain);
    if (!std::isfinite(l)) raise(ErrorKind::overflow, "calibrated l is not finite");
    return l;
}

double stationary_transition(const OscillatorConfig& cfg, std::size_t n) {
    cfg.validate();
    const double eps = cfg.epsilon();
    const double kappa = eps - 1.0;
    const double z = std::abs(cfg.zeta0);
    const double om = (1.0 - z) * (1.0 + z);
    const double a = std::norm(cfg.xi0);
    const double tx = cfg.xi0 == cd(0.0, 0.0) ? 0.0 : std::arg(cfg.xi0);
    const double tz = theta_zeta(cfg);
    const std::size_t m = n / 2;
    const double mm = double(m);
    if (n % 2 == 1 && a == 0.0) return 0.0;
    const cd x = std::polar(0.5 * a, 2.0 * tx - tz);
    const double log_pref = eps * std::log(om) + z * a * std::cos(2.0 * tx - tz) / om -
                            detail::log_bessel_pair_reduced(eps, a / om) + log_gamma(mm + 1.0);
    if (n % 2 == 0)
        return std::exp(log_pref + log_scaled_laguerre_sq(m, kappa, x, z) - log_gamma(mm + eps));
    return std::exp(log_pref + std::log(0.5 * a) + log_scaled_laguerre_sq(m, kappa + 1.0, x, z) -
                    log_gamma(mm + eps + 1.0));
}

AsymptoticUncertainties asymptotic_uncertainties(const OscillatorConfig& cfg, double t, AsymptoticRegime regime,
                                                 const AsymptoticGates& gates) {
    cfg.validate();
    const double z = std::abs(cfg.zeta0);
    const double om = (1.0 - z) * (1.0 + z);
    const double a = std::norm(cfg.xi0);
    const double ell = cfg.ell;
    AsymptoticUncertainties out;
    if (regime == AsymptoticRegime::small_argument) {
        if (std::abs(cfg.xi0) > gates.small_xi_max || z > gates.small_zeta_max)
            raise(ErrorKind::domain, "small-argument regime needs small |xi0| and |zeta0|");
        const double b = (4.0 * ell + 1.0) * om;
        out.mean_r = (b - a) / (b + a);
    } else {
        if (!(a / om >= gates.large_y_min)) raise(ErrorKind::domain, "large-argument regime needs large |xi0|^2/(1-|zeta0|^2)");
        out.mean_r = ell * om / (a - 2.0 * ell * ell * om);
    }
    const double gain = 1.0 + 4.0 * ell * out.mean_r;
    out.heisenberg = 0.5 * cfg.hbar * heisenberg_factor(cfg, t) * gain;
    out.sr = 0.25 * cfg.hbar * cfg.hbar * gain * gain;
    return out;
}

}  // namespace parabose
