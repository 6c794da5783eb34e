#include "parabose/observables.hpp"

#include <cmath>
#include <numbers>

#include "parabose/error.hpp"

namespace parabose {

Moments cs_moments(const CsSpec& spec, const AlgebraParams& params) {
    params.validate();
    if (!(std::abs(spec.zeta) < 1.0)) raise(ErrorKind::domain, "|zeta| must be below 1");
    const double l = params.length_scale;
    const double hbar = params.hbar;
    const cd z = spec.zeta;
    const double om = (1.0 - std::abs(z)) * (1.0 + std::abs(z));
    Moments m;
    m.mean_r = mean_reflection(z, spec.xi, spec.epsilon);
    const double gain = 1.0 + params.nu * m.mean_r;
    m.mean_x = std::numbers::sqrt2 * l * ((1.0 - std::conj(z)) * spec.xi).real() / om;
    m.mean_p = std::numbers::sqrt2 * hbar / l * ((1.0 + std::conj(z)) * spec.xi).imag() / om;
    m.var_x = l * l * std::norm(1.0 - z) * gain / (2.0 * om);
    m.var_p = (hbar / l) * (hbar / l) * std::norm(1.0 + z) * gain / (2.0 * om);
    m.cov_xp = -hbar * z.imag() * gain / om;
    return m;
}

UncertaintyProducts uncertainty_products(const Moments& m, const AlgebraParams& params, cd zeta) {
    const double hbar = params.hbar;
    const double gain = 1.0 + params.nu * m.mean_r;
    const double om = (1.0 - std::abs(zeta)) * (1.0 + std::abs(zeta));
    UncertaintyProducts u;
    u.heisenberg = std::sqrt(m.var_x * m.var_p);
    u.schrodinger_robertson = m.var_x * m.var_p - m.cov_xp * m.cov_xp;
    u.heisenberg_closed = 0.5 * hbar * std::sqrt(1.0 + 4.0 * zeta.imag() * zeta.imag() / (om * om)) * gain;
    u.sr_bound = 0.25 * hbar * hbar * gain * gain;
    return u;
}

cd xi_from_means(double mean_x, double mean_p, cd zeta, const AlgebraParams& params) {
    const double l = params.length_scale;
    return (1.0 + zeta) * mean_x / (std::numbers::sqrt2 * l) +
           cd(0.0, 1.0) * l * (1.0 - zeta) * mean_p / (std::numbers::sqrt2 * params.hbar);
}

PhaseSpaceOperators phase_space_operators(const AlgebraParams& params, std::size_t n) {
    const Ladder lad = build_ladder(params, n);
    const double l = params.length_scale;
    PhaseSpaceOperators ops;
    ops.x = (l / std::numbers::sqrt2) * (lad.a + lad.a_dagger);
    ops.p = (params.hbar / (std::numbers::sqrt2 * l)) * cd(0.0, -1.0) * (lad.a - lad.a_dagger);
    return ops;
}

Moments expectation_moments(const FockVector& psi, const AlgebraParams& params) {
    const std::size_t n = psi.truncation();
    const PhaseSpaceOperators ops = phase_space_operators(params, n);
    const Eigen::VectorXcd& v = psi.amplitudes;
    const Eigen::VectorXcd xv = ops.x * v;
    const Eigen::VectorXcd pv = ops.p * v;
    const double norm2 = v.squaredNorm();
    Moments m;
    m.mean_x = v.dot(xv).real() / norm2;
    m.mean_p = v.dot(pv).real() / norm2;
    m.var_x = xv.squaredNorm() / norm2 - m.mean_x * m.mean_x;
    m.var_p = pv.squaredNorm() / norm2 - m.mean_p * m.mean_p;
    m.cov_xp = xv.dot(pv).real() / norm2 - m.mean_x * m.mean_p;
    double r = 0.0;
    for (Eigen::Index k = 0; k < v.size(); ++k) r += (k % 2 == 0 ? 1.0 : -1.0) * std::norm(v[k]);
    m.mean_r = r / norm2;
    return m;
}

}  // namespace parabose
