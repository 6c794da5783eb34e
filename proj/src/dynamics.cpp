#include "parabose/dynamics.hpp"

#include <cmath>

#include "detail/ode.hpp"
#include "parabose/error.hpp"

namespace parabose {

namespace {

constexpr double kHalvingTolerance = 1e-8;
constexpr double kMuTolerance = 1e-9;
constexpr double kSqueezeLimit = 1.0 - 1e-6;
const cd I(0.0, 1.0);

template <std::size_t K>
detail::OdePath<K> path_of(const std::vector<double>& t, const std::vector<std::array<cd, K>>& y,
                           const std::vector<std::array<cd, K>>& dy) {
    detail::OdePath<K> p;
    p.t = t;
    p.y = y;
    p.dy = dy;
    return p;
}

}  // namespace

cd MotionIntegral::f_at(double t) const {
    std::vector<std::array<cd, 1>> y(f.size()), dy(f.size());
    for (std::size_t k = 0; k < f.size(); ++k) {
        y[k] = {f[k]};
        dy[k] = {f_dot[k]};
    }
    return path_of<1>(times, y, dy).at(t)[0];
}

cd MotionIntegral::g_at(double t) const {
    std::vector<std::array<cd, 1>> y(g.size()), dy(g.size());
    for (std::size_t k = 0; k < g.size(); ++k) {
        y[k] = {g[k]};
        dy[k] = {g_dot[k]};
    }
    return path_of<1>(times, y, dy).at(t)[0];
}

MotionIntegral solve_fg(const CoefficientSchedule& schedule, cd f0, cd g0, cd phi0, double t_final, double dt) {
    const double mu0 = std::norm(f0) - std::norm(g0);
    if (!(std::abs(mu0) > 1e-12 * (std::norm(f0) + std::norm(g0))))
        raise(ErrorKind::crossing, "|f0| = |g0|: the Bogoliubov map is singular");
    auto rhs = [&](double t, const detail::OdeState<2>& y) {
        const ScheduleSample s = schedule.at(t);
        return detail::OdeState<2>{I * (s.beta * y[0] - std::conj(s.alpha) * y[1]), I * (s.alpha * y[0] - s.beta * y[1])};
    };
    auto check = [&](double, const detail::OdeState<2>& y) {
        if (!std::isfinite(std::abs(y[0])) || !std::isfinite(std::abs(y[1]))) raise(ErrorKind::mu_drift, "f, g diverged");
    };
    const auto p = detail::rk4_checked<2>(rhs, check, {f0, g0}, t_final, dt, kHalvingTolerance);

    MotionIntegral mi;
    mi.times = p.t;
    mi.phi0 = phi0;
    mi.mu = mu0;
    for (std::size_t k = 0; k < p.t.size(); ++k) {
        mi.f.push_back(p.y[k][0]);
        mi.g.push_back(p.y[k][1]);
        mi.f_dot.push_back(p.dy[k][0]);
        mi.g_dot.push_back(p.dy[k][1]);
        const double mu = std::norm(p.y[k][0]) - std::norm(p.y[k][1]);
        mi.max_mu_drift = std::max(mi.max_mu_drift, std::abs(mu - mu0));
        if (std::abs(mu) < 1e-12 * (std::norm(p.y[k][0]) + std::norm(p.y[k][1])))
            raise(ErrorKind::crossing, "|f| = |g| crossing along the trajectory");
    }
    if (mi.max_mu_drift > kMuTolerance * std::abs(mu0)) raise(ErrorKind::mu_drift, "mu drift exceeds tolerance; reduce dt");
    mi.u = g0 * std::conj(phi0) - std::conj(f0) * phi0;
    return mi;
}

StateParams StateTrajectory::at(double t) const {
    const auto y = path_of<4>(times, nodes, slopes).at(t);
    StateParams s;
    s.zeta = y[0];
    s.xi = y[1];
    s.z_eigen = z_eigen;
    const double j1 = y[2].real();
    const double j2 = y[2].imag();
    s.theta_svs = epsilon * j1 - j2;
    s.theta_cs = j1 - j2;
    return s;
}

cd StateTrajectory::f_ratio(double t) const {
    const auto y = path_of<4>(times, nodes, slopes).at(t);
    return std::exp(-I * y[3]);
}

StateTrajectory solve_zeta_xi(const CoefficientSchedule& schedule, cd zeta0, cd xi0, double epsilon, double t_final,
                              double dt) {
    if (!(std::abs(zeta0) < 1.0)) raise(ErrorKind::domain, "|zeta0| must be below 1");
    if (!std::isfinite(epsilon) || epsilon < 0.5) raise(ErrorKind::domain, "epsilon must be >= 1/2");
    auto rhs = [&](double t, const detail::OdeState<4>& y) {
        const ScheduleSample s = schedule.at(t);
        const cd ac = std::conj(s.alpha);
        const cd zeta = y[0];
        return detail::OdeState<4>{
            I * ac * zeta * zeta - 2.0 * I * s.beta * zeta + I * s.alpha,
            I * (ac * zeta - s.beta) * y[1],
            cd((s.alpha * std::conj(zeta)).real() - s.beta, s.delta),
            ac * zeta - s.beta,
        };
    };
    auto check = [&](double, const detail::OdeState<4>& y) {
        if (!(std::abs(y[0]) < kSqueezeLimit)) raise(ErrorKind::squeeze_blowup, "|zeta| reached 1");
    };
    const auto p = detail::rk4_checked<4>(rhs, check, {zeta0, xi0, cd(0.0), cd(0.0)}, t_final, dt, kHalvingTolerance);
    StateTrajectory tr;
    tr.epsilon = epsilon;
    tr.z_eigen = xi0;
    tr.times = p.t;
    tr.nodes = p.y;
    tr.slopes = p.dy;
    return tr;
}

OperatorMatrix assemble_A(cd f, cd g, cd phi0, const AlgebraParams& params, std::size_t n) {
    const Ladder l = build_ladder(params, n);
    const auto size = static_cast<Eigen::Index>(n);
    return f * l.a + g * l.a_dagger + phi0 * OperatorMatrix::Identity(size, size);
}

OperatorMatrix assemble_A(const MotionIntegral& mi, double t, const AlgebraParams& params, std::size_t n) {
    return assemble_A(mi.f_at(t), mi.g_at(t), mi.phi0, params, n);
}

}  // namespace parabose
