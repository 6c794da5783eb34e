#include "parabose/coordrep.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "parabose/error.hpp"
#include "parabose/quadrature.hpp"
#include "parabose/specfun.hpp"

namespace parabose {

namespace {

using specfun::log_gamma;
using specfun::RealOrder;

constexpr double kSmallArgument = 3.0;

void check_x(double x) {
    if (!std::isfinite(x) || x < 0.0) raise(ErrorKind::domain, "x must be finite and nonnegative");
}

int coordinate_ell(const CsSpec& spec, const AlgebraParams& params) {
    params.validate();
    const int ell = quantized_ell(params);
    if (spec.epsilon != params.epsilon) raise(ErrorKind::domain, "state epsilon differs from the algebra epsilon");
    if (!(std::abs(spec.zeta) < 1.0)) raise(ErrorKind::domain, "|zeta| must be below 1");
    if (!std::isfinite(spec.xi.real()) || !std::isfinite(spec.xi.imag())) raise(ErrorKind::domain, "xi must be finite");
    return ell;
}

double arg_from_above(cd z) {
    if (z.imag() == 0.0) return std::arg(cd(z.real(), 0.0));
    return std::arg(z);
}

// Envelope of rho: exp(-a x^2 + 2 b x).
struct Envelope {
    double a;
    double b;
};

Envelope envelope(const CsSpec& spec, const AlgebraParams& params) {
    const double l = params.length_scale;
    const double om = (1.0 - std::abs(spec.zeta)) * (1.0 + std::abs(spec.zeta));
    const double d = std::abs(1.0 - spec.zeta);
    return {om / (d * d * l * l), std::numbers::sqrt2 * std::abs(spec.xi) / (d * l)};
}

double half_line_norm(const std::function<double(double)>& rho, double x_max, int panels) {
    const double coarse = quadrature::integrate(rho, 0.0, x_max, panels);
    const double fine = quadrature::integrate(rho, 0.0, x_max, 2 * panels);
    if (std::abs(coarse - fine) > 1e-11 * std::max(1.0, std::abs(fine)))
        raise(ErrorKind::quadrature, "density quadrature did not converge");
    return 2.0 * fine;
}

}  // namespace

double vacuum_wavefunction(int ell, double l, double x) {
    if (ell < 0) raise(ErrorKind::quantization, "ell must be a nonnegative integer");
    if (!(l > 0.0)) raise(ErrorKind::domain, "l must be positive");
    check_x(x);
    const double eps = 2.0 * ell + 0.5;
    if (x == 0.0) return ell == 0 ? std::exp(-0.5 * log_gamma(eps) - eps * std::log(l)) : 0.0;
    return std::exp(2.0 * ell * std::log(x) - 0.5 * (x / l) * (x / l) - eps * std::log(l) - 0.5 * log_gamma(eps));
}

double vacuum_wavefunction(const AlgebraParams& params, double x) {
    params.validate();
    return vacuum_wavefunction(quantized_ell(params), params.length_scale, x);
}

WavefunctionParts cs_wavefunction_parts(const CsSpec& spec, const AlgebraParams& params, double x) {
    const int ell = coordinate_ell(spec, params);
    check_x(x);
    if (x == 0.0 && ell > 0) return {};
    const double kap = spec.epsilon - 1.0;
    const double l = params.length_scale;
    const cd z = spec.zeta;
    const double om = (1.0 - std::abs(z)) * (1.0 + std::abs(z));
    const cd log_one_minus = std::log(1.0 - z);
    const cd w = std::numbers::sqrt2 * spec.xi * x / ((1.0 - z) * l);
    const double y = std::norm(spec.xi) / om;
    const double arg_xi = spec.xi == cd(0.0, 0.0) ? 0.0 : arg_from_above(spec.xi);

    cd expo = 0.5 * (1.0 + kap) * std::log(om) - (1.0 + kap) * (log_one_minus + std::log(l)) +
              cd(0.0, kap * arg_xi + spec.theta_cs) - ((1.0 + z) / (1.0 - z)) * (x * x / (2.0 * l * l)) -
              (1.0 - std::conj(z)) * spec.xi * spec.xi / (2.0 * (1.0 - z) * om) -
              0.5 * detail::log_bessel_pair_reduced(spec.epsilon, y);
    if (x > 0.0) expo += 2.0 * ell * std::log(x);

    cd even, odd;
    if (std::abs(w) <= kSmallArgument) {
        even = specfun::bessel_i_reduced(RealOrder{kap}, w);
        odd = 0.5 * w * specfun::bessel_i_reduced(RealOrder{kap + 1.0}, w);
    } else {
        expo += std::abs(w.real()) - kap * std::log(0.5 * w);
        even = specfun::bessel_i_scaled(RealOrder{kap}, w);
        odd = specfun::bessel_i_scaled(RealOrder{kap + 1.0}, w);
    }
    const cd scale = std::exp(expo);
    return {scale * even, scale * odd};
}

cd cs_wavefunction(const CsSpec& spec, const AlgebraParams& params, double x) {
    const auto parts = cs_wavefunction_parts(spec, params, x);
    const cd w = std::numbers::sqrt2 * spec.xi * x / ((1.0 - spec.zeta) * params.length_scale);
    if (spec.epsilon != 0.5 || std::abs(w) <= kSmallArgument || w.real() >= 0.0) return parts.even + parts.odd;
    // ell = 0: cosh w + sinh w cancels for Re w < 0; rescale the even part by e^w / cosh w instead.
    return parts.even * (2.0 / (1.0 + std::exp(-2.0 * w)));
}

cd cs_wavefunction_gaussian(const CsSpec& spec, const AlgebraParams& params, double x, double rho_phase) {
    params.validate();
    if (!(std::abs(spec.zeta) < 1.0)) raise(ErrorKind::domain, "|zeta| must be below 1");
    check_x(x);
    const double l = params.length_scale;
    const cd z = spec.zeta;
    const cd xi = spec.xi;
    const double om = (1.0 - std::abs(z)) * (1.0 + std::abs(z));
    const cd shift = x - l * std::numbers::sqrt2 * xi / (1.0 + z);
    const cd expo = -(1.0 / (2.0 * l * l)) * ((1.0 + z) / (1.0 - z)) * shift * shift +
                    (1.0 + std::conj(z)) / ((1.0 + z) * om) * (0.5 * xi * xi) - 0.5 * std::norm(xi) / om +
                    cd(0.0, rho_phase);
    return std::pow(om, 0.25) / std::sqrt(std::sqrt(std::numbers::pi) * l * (1.0 - z)) * std::exp(expo);
}

double density_closed_form(const CsSpec& spec, const AlgebraParams& params, double x) {
    const int ell = coordinate_ell(spec, params);
    check_x(x);
    if (x == 0.0 && ell > 0) return 0.0;
    const double kap = spec.epsilon - 1.0;
    const double l = params.length_scale;
    const cd z = spec.zeta;
    const double om = (1.0 - std::abs(z)) * (1.0 + std::abs(z));
    const double d2 = std::norm(1.0 - z);
    const cd w = std::numbers::sqrt2 * spec.xi * x / ((1.0 - z) * l);
    const double y = std::norm(spec.xi) / om;
    const double gauss = -om * x * x / (d2 * l * l) - ((1.0 - std::conj(z)) / (1.0 - z) * spec.xi * spec.xi).real() / om;
    const double lead = std::log(om / d2) - 2.0 * std::log(l);
    if (spec.xi == cd(0.0, 0.0) || std::abs(w) <= kSmallArgument) {
        // |I(w) sum|^2 / I(y) sum = (x^2 om / (|1-z|^2 l^2))^kap |E(w) sum|^2 / D(y)
        const double e = std::norm(specfun::bessel_i_reduced(RealOrder{kap}, w) +
                                   0.5 * w * specfun::bessel_i_reduced(RealOrder{kap + 1.0}, w));
        double logr = lead + kap * std::log(om / (d2 * l * l)) + std::log(e) -
                      detail::log_bessel_pair_reduced(spec.epsilon, y) + gauss;
        if (x > 0.0) logr += 4.0 * ell * std::log(x);
        return std::exp(logr);
    }
    // I_{-1/2}(w) + I_{1/2}(w) = sqrt(2 / (pi w)) e^w, exact and free of cancellation for Re w < 0.
    const double num = ell == 0 ? 2.0 / (std::numbers::pi * std::abs(w)) * std::exp(2.0 * (w.real() - std::abs(w.real())))
                                : std::norm(specfun::bessel_i_scaled(RealOrder{kap}, w) +
                                            specfun::bessel_i_scaled(RealOrder{kap + 1.0}, w));
    const double den = specfun::bessel_i_scaled(RealOrder{kap}, y).real() + specfun::bessel_i_scaled(RealOrder{kap + 1.0}, y).real();
    return std::exp(lead + std::log(x) + std::log(num / den) + 2.0 * std::abs(w.real()) - y + gauss);
}

double number_state_wavefunction(std::size_t n, const AlgebraParams& params, double x) {
    params.validate();
    const int ell = quantized_ell(params);
    check_x(x);
    const double l = params.length_scale;
    const double eps = params.epsilon;
    const double u = (x / l) * (x / l);
    const std::size_t m = n / 2;
    const double mm = double(m);
    const double sign = m % 2 == 0 ? 1.0 : -1.0;
    const double psi0 = vacuum_wavefunction(ell, l, x);
    if (n % 2 == 0) {
        const double c = std::exp(0.5 * (log_gamma(mm + 1.0) + log_gamma(eps) - log_gamma(mm + eps)));
        return sign * c * specfun::laguerre(static_cast<int>(m), RealOrder{eps - 1.0}, u).real() * psi0;
    }
    const double c = std::exp(0.5 * (log_gamma(mm + 1.0) + log_gamma(eps) - log_gamma(mm + eps + 1.0)));
    return sign * (x / l) * c * specfun::laguerre(static_cast<int>(m), RealOrder{eps}, u).real() * psi0;
}

double density_normalization(const CsSpec& spec, const AlgebraParams& params) {
    const int ell = coordinate_ell(spec, params);
    const Envelope env = envelope(spec, params);
    const double x_max = (env.b + std::sqrt(env.b * env.b + 100.0 * env.a)) / env.a + std::sqrt((4.0 * ell + 2.0) / env.a);
    const int panels = static_cast<int>(std::ceil(4.0 * x_max * std::sqrt(env.a))) + 8;
    return half_line_norm([&](double x) { return std::norm(cs_wavefunction(spec, params, x)); }, x_max, panels);
}

double parity_resolved_normalization(const CsSpec& spec, const AlgebraParams& params) {
    const int ell = coordinate_ell(spec, params);
    const Envelope env = envelope(spec, params);
    const double x_max = (env.b + std::sqrt(env.b * env.b + 100.0 * env.a)) / env.a + std::sqrt((4.0 * ell + 2.0) / env.a);
    const int panels = static_cast<int>(std::ceil(4.0 * x_max * std::sqrt(env.a))) + 8;
    return half_line_norm([&](double x) {
        const auto parts = cs_wavefunction_parts(spec, params, x);
        return std::norm(parts.even) + std::norm(parts.odd);
    }, x_max, panels);
}

double vacuum_normalization(const AlgebraParams& params) {
    params.validate();
    const int ell = quantized_ell(params);
    const double l = params.length_scale;
    const double x_max = l * (10.0 + std::sqrt(4.0 * ell + 2.0));
    return half_line_norm([&](double x) {
        const double v = vacuum_wavefunction(ell, l, x);
        return v * v;
    }, x_max, 48);
}

WavefunctionGrid probability_density(const CsSpec& spec, const AlgebraParams& params, std::span<const double> grid) {
    const int ell = coordinate_ell(spec, params);
    WavefunctionGrid g;
    g.ell = ell;
    g.params = params;
    g.x_values.assign(grid.begin(), grid.end());
    for (std::size_t k = 1; k < g.x_values.size(); ++k)
        if (!(g.x_values[k] > g.x_values[k - 1])) raise(ErrorKind::configuration, "density grid must be increasing");
    for (double x : g.x_values) {
        const cd psi = cs_wavefunction(spec, params, x);
        const double rho = std::norm(psi);
        const double closed = density_closed_form(spec, params, x);
        const double scale = std::max({rho, closed, 1e-250});
        g.route_discrepancy = std::max(g.route_discrepancy, std::abs(rho - closed) / scale);
        g.psi_values.push_back(psi);
        g.rho_values.push_back(rho);
    }
    g.normalization = density_normalization(spec, params);
    g.parity_normalization = parity_resolved_normalization(spec, params);
    return g;
}

std::vector<double> hybrid_grid(double x_min, double x_max, std::size_t points, double l) {
    if (!(x_min > 0.0) || !(x_max > x_min) || points < 2) raise(ErrorKind::configuration, "grid needs 0 < x_min < x_max and 2+ points");
    const double x_switch = 0.1 * l;
    std::vector<double> out;
    out.reserve(points);
    std::size_t n_log = x_min < x_switch && x_switch < x_max ? points / 4 : 0;
    const std::size_t n_lin = points - n_log;
    for (std::size_t i = 0; i < n_log; ++i) out.push_back(x_min * std::pow(x_switch / x_min, double(i) / double(n_log)));
    const double start = n_log > 0 ? x_switch : x_min;
    for (std::size_t j = 0; j < n_lin; ++j)
        out.push_back(n_lin == 1 ? start : start + (x_max - start) * double(j) / double(n_lin - 1));
    return out;
}

HamiltonianMapping hamiltonian_mapping(cd alpha, double beta, double delta, const AlgebraParams& params) {
    params.validate();
    const double l = params.length_scale;
    const double hbar = params.hbar;
    const double minus = beta - alpha.real();
    if (!(minus > 0.0)) raise(ErrorKind::mapping, "Re(beta - alpha) <= 0 gives a nonpositive mass");
    HamiltonianMapping m;
    const double inv_mass = l * l / hbar * minus;
    const double m_omega2 = hbar / (l * l) * (beta + alpha.real());
    m.mass = 1.0 / inv_mass;
    m.omega_squared = m_omega2 * inv_mass;
    if (m.omega_squared < 0.0) raise(ErrorKind::mapping, "Re(beta + alpha) < 0 gives an inverted oscillator");
    m.omega = std::sqrt(m.omega_squared);
    m.cross = alpha.imag();
    m.offset = hbar * delta;
    return m;
}

double vacuum_annihilation_residual(const AlgebraParams& params, double x_lo, double x_hi, std::size_t points, double h) {
    params.validate();
    const int ell = quantized_ell(params);
    const double l = params.length_scale;
    if (points < 2 || !(x_hi > x_lo) || !(x_lo - 2.0 * h > 0.0)) raise(ErrorKind::configuration, "bad finite-difference window");
    auto psi = [&](double x) { return vacuum_wavefunction(ell, l, x); };
    double worst = 0.0;
    for (std::size_t i = 0; i < points; ++i) {
        const double x = x_lo + (x_hi - x_lo) * double(i) / double(points - 1);
        const double d = (-psi(x + 2 * h) + 8 * psi(x + h) - 8 * psi(x - h) + psi(x - 2 * h)) / (12 * h);
        const double r = l / std::numbers::sqrt2 * (d - params.nu / (2.0 * x) * psi(x) + x / (l * l) * psi(x));
        worst = std::max(worst, std::abs(r));
    }
    return worst;
}

}  // namespace parabose
