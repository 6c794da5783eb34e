// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <fmt/format.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "parabose/completeness.hpp"
#include "parabose/coordrep.hpp"
#include "parabose/dynamics.hpp"
#include "parabose/error.hpp"
#include "parabose/fock.hpp"
#include "parabose/observables.hpp"
#include "parabose/oscillator.hpp"
#include "parabose/parabose.h"
#include "parabose/states.hpp"

using namespace parabose;
namespace fs = std::filesystem;

namespace {

constexpr double pi = std::numbers::pi;

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok) pass = false;
        if (!detail.empty()) detail += "; ";
        detail += what + (ok ? "" : " [x]");
    }
};

std::string sci(double v) { return fmt::format("{:.2e}", v); }

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

double block_max(const OperatorMatrix& m, Eigen::Index n) { return m.topLeftCorner(n, n).cwiseAbs().maxCoeff(); }

double fidelity(const FockVector& a, const FockVector& b) {
    return std::norm(inner(a, b)) / (a.amplitudes.squaredNorm() * b.amplitudes.squaredNorm());
}

double phase_free_distance(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
    const cd ov = a.dot(b);
    return (a * (ov / std::abs(ov)) - b).cwiseAbs().maxCoeff();
}

CoefficientSchedule wobble() {
    SinusoidalTerms terms;
    terms.alpha1 = 0.2;
    terms.beta0 = 1.0;
    terms.omega = 1.0;
    return CoefficientSchedule::sinusoidal(terms);
}

Outcome ac1() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    const std::size_t n = 128;
    const auto block = Eigen::Index(n - 4);
    double worst = 0.0;
    for (double eps : {0.5, 1.5, 2.5}) {
        const auto p = AlgebraParams::from_epsilon(eps);
        const auto l = build_ladder(p, n);
        const auto id = OperatorMatrix::Identity(n, n);
        const OperatorMatrix ac = l.a * l.a_dagger + l.a_dagger * l.a;
        worst = std::max({worst, block_max(l.a * l.a_dagger - l.a_dagger * l.a - (id + p.nu * l.reflection), block),
                          block_max(l.reflection * l.a + l.a * l.reflection, block),
                          block_max(l.reflection * l.reflection - id, block),
                          block_max(ac * l.a - l.a * ac + 2.0 * l.a, block),
                          block_max(ac * l.a_dagger - l.a_dagger * ac - 2.0 * l.a_dagger, block)});
    }
    const double secs = seconds_since(t0);
    o.require(worst <= 1e-12, "max entry residual " + sci(worst));
    o.require(secs < 1.0, fmt::format("{:.2f} s", secs));
    return o;
}

Outcome ac2() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    const std::size_t n = 256;
    const double eps = 2.5;
    const auto p = AlgebraParams::from_epsilon(eps);
    const cd zeta0(0.3, 0.1), xi0(0.9, -0.5);
    const auto psi0 = cs_amplitudes(CsSpec{zeta0, xi0, eps, 0.0}, n);
    const double period = 2.0 * pi;
    std::vector<double> times;
    for (int k = 0; k <= 16; ++k) times.push_back(period * k / 16.0);
    const double dt = period / 16384;
    double worst = 0.0;
    for (const auto& sched : {CoefficientSchedule::constant(cd(0.2, 0.1), 1.0, 0.3), wobble()}) {
        const auto mi = solve_fg(sched, 1.0, zeta0, 0.0, period, dt);
        const auto states = evolve_schrodinger_sampled(psi0, sched, times, dt, p);
        for (std::size_t k = 0; k < times.size(); ++k) {
            const auto a = assemble_A(mi, times[k], p, n);
            const Eigen::VectorXcd r = a * states[k].amplitudes - xi0 * states[k].amplitudes;
            worst = std::max(worst, r.head(Eigen::Index(n - 2)).norm());
        }
    }
    const double secs = seconds_since(t0);
    o.require(worst <= 1e-6, "eigen residual " + sci(worst));
    o.require(secs < 30.0, fmt::format("{:.2f} s", secs));
    return o;
}

Outcome ac3() {
    Outcome o;
    std::mt19937_64 rng(20240611);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        CoefficientSchedule sched = CoefficientSchedule::constant(0.0, 1.0, 0.0);
        if (trial % 2 == 0) {
            sched = CoefficientSchedule::constant(cd(0.4 * u(rng), 0.4 * u(rng)), 1.0 + 0.5 * std::abs(u(rng)), u(rng));
        } else {
            SinusoidalTerms terms;
            terms.alpha0 = cd(0.2 * u(rng), 0.2 * u(rng));
            terms.alpha1 = cd(0.2 * u(rng), 0.2 * u(rng));
            terms.beta0 = 1.0 + 0.3 * std::abs(u(rng));
            terms.beta1 = 0.1 * u(rng);
            terms.delta0 = u(rng);
            terms.omega = 0.5 + std::abs(u(rng));
            terms.phase = u(rng);
            sched = CoefficientSchedule::sinusoidal(terms);
        }
        const cd f0(1.0 + 0.2 * u(rng), 0.2 * u(rng));
        const cd g0(0.5 * u(rng), 0.5 * u(rng));
        const auto mi = solve_fg(sched, f0, g0, 0.0, 8.0, 4e-3);
        worst = std::max(worst, mi.max_mu_drift / std::abs(mi.mu));
    }
    o.require(worst <= 1e-9, "relative mu drift " + sci(worst));
    return o;
}

Outcome ac4() {
    Outcome o;
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double worst_svs = 0.0, worst_cs = 0.0;
    for (int k = 0; k < 100; ++k) {
        const cd zeta = std::polar(0.85 * u(rng), 2.0 * pi * u(rng));
        const cd xi = std::polar(4.0 * u(rng), 2.0 * pi * u(rng));
        const double eps = 0.5 + 5.0 * u(rng);
        const auto s = svs_amplitudes(SvsSpec{zeta, eps, u(rng)});
        const auto c = cs_amplitudes(CsSpec{zeta, xi, eps, u(rng)});
        worst_svs = std::max(worst_svs, std::abs(s.norm_squared() - 1.0));
        worst_cs = std::max(worst_cs, c.renormalized ? 1.0 : std::abs(c.norm_squared() - 1.0));
    }
    o.require(worst_svs <= 1e-9, "SVS norm " + sci(worst_svs));
    o.require(worst_cs <= 1e-9, "CS norm " + sci(worst_cs));
    return o;
}

Outcome ac5() {
    Outcome o;
    const double r = 0.8, th = 1.1;
    const cd zeta = std::polar(std::tanh(r), th);
    const auto v = svs_amplitudes(SvsSpec{zeta, 0.5, 0.0});
    double worst_svs = 0.0;
    for (std::size_t n = 0; 2 * n < v.truncation(); ++n) {
        const double mag = std::exp(0.5 * std::lgamma(2.0 * n + 1) - n * std::log(2.0) - std::lgamma(n + 1.0));
        const cd want = mag * std::pow(-zeta, double(n)) / std::sqrt(std::cosh(r));
        worst_svs = std::max({worst_svs, std::abs(v.amplitudes[Eigen::Index(2 * n)] - want),
                              std::abs(v.amplitudes[Eigen::Index(2 * n + 1)])});
    }
    double worst_cs = 0.0;
    for (cd xi : {cd(0.9, 1.4), cd(-2.0, 0.3), cd(0.1, 0.0)}) {
        const auto c = cs_amplitudes(CsSpec{0.0, xi, 0.5, 0.0});
        Eigen::VectorXcd want(c.amplitudes.size());
        for (Eigen::Index k = 0; k < want.size(); ++k)
            want[k] = std::exp(-0.5 * std::norm(xi) - 0.5 * std::lgamma(k + 1.0)) * std::pow(xi, double(k));
        worst_cs = std::max(worst_cs, phase_free_distance(c.amplitudes, want));
    }
    o.require(worst_svs <= 1e-12, "canonical squeezed vacuum " + sci(worst_svs));
    o.require(worst_cs <= 1e-12, "canonical coherent state " + sci(worst_cs));
    return o;
}

Outcome ac6() {
    Outcome o;
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double worst_sum = 0.0, worst_pn = 0.0;
    for (int k = 0; k < 40; ++k) {
        const cd zeta = std::polar(0.85 * u(rng), 2.0 * pi * u(rng));
        const cd xi = std::polar(4.0 * u(rng), 2.0 * pi * u(rng));
        const double eps = 0.5 + 5.0 * u(rng);
        const auto c = cs_amplitudes(CsSpec{zeta, xi, eps, 0.0});
        const auto s = svs_amplitudes(SvsSpec{zeta, eps, 0.0});
        double cs_total = 0.0, svs_total = 0.0;
        for (std::size_t n = 0; n < c.truncation(); ++n) {
            const double p = cs_transition(zeta, xi, eps, n);
            cs_total += p;
            worst_pn = std::max(worst_pn, std::abs(p - std::norm(c.amplitudes[Eigen::Index(n)])));
        }
        for (std::size_t n = 0; 2 * n < s.truncation(); ++n) {
            const double p = svs_transition(zeta, eps, n);
            svs_total += p;
            worst_pn = std::max(worst_pn, std::abs(p - std::norm(s.amplitudes[Eigen::Index(2 * n)])));
        }
        worst_sum = std::max({worst_sum, std::abs(cs_total - 1.0), std::abs(svs_total - 1.0)});
    }
    o.require(worst_sum <= 1e-9, "sum rule " + sci(worst_sum));
    o.require(worst_pn <= 1e-10, "P_n vs |c_n|^2 " + sci(worst_pn));

    // wider SVS distributions at larger epsilon
    bool ordered = true;
    std::size_t prev = 0;
    for (double eps : {0.5, 2.5, 4.5, 6.5}) {
        std::size_t last = 0;
        for (std::size_t n = 0; n < 200; ++n)
            if (svs_transition(0.3, eps, n) > 1e-3) last = n;
        ordered = ordered && last > prev;
        prev = last;
    }
    o.require(ordered, "SVS dispersion ordered in epsilon");

    // odd levels need a displacement, in the static family and along the oscillator orbit
    bool gated = true;
    for (double eps : {0.5, 2.5, 4.5}) {
        for (std::size_t n = 1; n < 30; n += 2) {
            gated = gated && cs_transition(0.45, 0.0, eps, n) == 0.0;
            gated = gated && cs_transition(0.45, cd(0.0, 1.0), eps, n) > 0.0;
        }
    }
    for (double z : {0.0, 0.25, 0.5, 0.75}) {
        const auto still = OscillatorConfig::polar(1.0, 1, z, 0.0, 0.0, 0.0);
        const auto moving = OscillatorConfig::polar(1.0, 1, z, 0.0, 1.0, pi / 2);
        for (std::size_t n = 1; n < 30; n += 2) {
            gated = gated && stationary_transition(still, n) == 0.0;
            gated = gated && stationary_transition(moving, n) > 0.0;
        }
    }
    o.require(gated, "odd levels gated by xi");
    return o;
}

Outcome ac7() {
    Outcome o;
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double worst_m = 0.0;
    for (int k = 0; k < 50; ++k) {
        const double eps = 0.5 + 4.0 * u(rng);
        const auto p = AlgebraParams::from_epsilon(eps, 0.5 + 1.5 * u(rng), 0.5 + u(rng));
        const CsSpec s{std::polar(0.7 * u(rng), 6.3 * u(rng)), std::polar(3.0 * u(rng), 6.3 * u(rng)), eps, 0.0};
        const auto a = cs_moments(s, p);
        const auto b = expectation_moments(cs_amplitudes(s, cs_required_truncation(s) + 16), p);
        worst_m = std::max({worst_m, std::abs(a.mean_x - b.mean_x), std::abs(a.mean_p - b.mean_p),
                            std::abs(a.var_x - b.var_x), std::abs(a.var_p - b.var_p), std::abs(a.cov_xp - b.cov_xp),
                            std::abs(a.mean_r - b.mean_r)});
    }
    double worst_sr = 0.0;
    for (int k = 0; k < 200; ++k) {
        const double eps = 0.5 + 4.0 * u(rng);
        const auto p = AlgebraParams::from_epsilon(eps, 0.5 + u(rng), 0.5 + u(rng));
        const cd zeta = std::polar(0.9 * u(rng), 6.3 * u(rng));
        const auto m = cs_moments(CsSpec{zeta, std::polar(4.0 * u(rng), 6.3 * u(rng)), eps, 0.0}, p);
        const auto up = uncertainty_products(m, p, zeta);
        worst_sr = std::max(worst_sr, std::abs(up.schrodinger_robertson - up.sr_bound) / up.sr_bound);
    }
    o.require(worst_m <= 1e-8, "moments vs expectation " + sci(worst_m));
    o.require(worst_sr <= 1e-10, "SR saturation " + sci(worst_sr));
    return o;
}

Outcome ac8() {
    Outcome o;
    double worst_vac = 0.0;
    for (int ell = 0; ell <= 3; ++ell)
        for (double l : {0.6, 1.0, 2.3})
            worst_vac = std::max(worst_vac, std::abs(vacuum_normalization(AlgebraParams::from_ell(ell, l)) - 1.0));

    // literal half-line norm on states whose even and odd parts do not interfere
    double worst_literal = 0.0, worst_route = 0.0;
    for (int ell = 0; ell <= 3; ++ell) {
        const auto p = AlgebraParams::from_ell(ell);
        const auto g = probability_density(CsSpec{0.45, cd(0.0, 1.0), p.epsilon, 0.0}, p,
                                           hybrid_grid(1e-3, 10.0, 2048, 1.0));
        worst_literal = std::max(worst_literal, std::abs(g.normalization - 1.0));
        worst_route = std::max(worst_route, g.route_discrepancy);
    }
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double worst_parity = 0.0;
    for (int k = 0; k < 8; ++k) {
        const int ell = k % 4;
        const auto p = AlgebraParams::from_ell(ell, 0.5 + u(rng));
        const CsSpec s{std::polar(0.7 * u(rng), 6.3 * u(rng)), std::polar(3.0 * u(rng), 6.3 * u(rng)), p.epsilon, u(rng)};
        const auto g = probability_density(
            s, p, hybrid_grid(1e-3 * p.length_scale, 10.0 * p.length_scale, 512, p.length_scale));
        worst_parity = std::max(worst_parity, std::abs(g.parity_normalization - 1.0));
        worst_route = std::max(worst_route, g.route_discrepancy);
        const CsSpec q{0.8 * u(rng) - 0.4, cd(0.0, 5.0 * u(rng) - 2.5), p.epsilon, u(rng)};
        worst_literal = std::max(worst_literal, std::abs(density_normalization(q, p) - 1.0));
    }

    const auto cfg = OscillatorConfig::polar(1.2, 0, 0.4, 0.9, 1.3, 2.2, 0.8);
    const auto p0 = cfg.algebra();
    double worst_gauss = 0.0;
    for (int k = 0; k <= 20; ++k) {
        const double t = 0.37 * k;
        const auto spec = state_spec(cfg, t);
        const double rho_phase = -0.5 * cfg.omega0 * t;
        const double turn = spec.theta_cs - rho_phase - 0.5 * std::arg(spec.xi);
        for (double x : {0.0, 0.05, 0.6, 1.7, 3.2}) {
            const cd a = cs_wavefunction(spec, p0, x);
            const cd b = cs_wavefunction_gaussian(spec, p0, x, rho_phase) * std::polar(1.0, turn);
            worst_gauss = std::max(worst_gauss, std::abs(a - b));
        }
    }
    o.require(worst_vac <= 1e-8, "vacuum norm " + sci(worst_vac));
    o.require(worst_literal <= 1e-8, "half-line CS norm " + sci(worst_literal));
    o.require(worst_parity <= 1e-8, "parity-resolved CS norm " + sci(worst_parity));
    o.require(worst_route <= 1e-10, "two-route density " + sci(worst_route));
    o.require(worst_gauss <= 1e-10, "ell=0 Gaussian form " + sci(worst_gauss));
    return o;
}

Outcome ac9() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    double worst_diag = 0.0;
    for (double eps : {1.5, 2.5, 5.5})
        for (std::size_t n = 0; n <= 15; ++n) worst_diag = std::max(worst_diag, diagonal_identity_residual(eps, n));
    const double block = identity_block_residual(2.5, 8);
    bool rejected = true;
    for (double eps : {0.5, 0.9, 1.0}) {
        try {
            identity_block_residual(eps, 8);
            rejected = false;
        } catch (const parabose::Error& e) {
            rejected = rejected && e.kind() == ErrorKind::domain;
        }
    }
    const double secs = seconds_since(t0);
    o.require(worst_diag <= 1e-8, "diagonal identity " + sci(worst_diag));
    o.require(block <= 1e-6, "K=8 block " + sci(block));
    o.require(rejected, "epsilon <= 1 rejected");
    o.require(secs < 10.0, fmt::format("{:.2f} s", secs));
    return o;
}

Outcome ac10() {
    Outcome o;
    const std::size_t n = 256;
    double worst_inf = 0.0;
    for (const auto& cfg : {OscillatorConfig::polar(1.0, 0, 0.3, 0.2, 1.0, 0.5),
                            OscillatorConfig::polar(1.0, 1, 0.6, -1.0, 2.0, 2.0),
                            OscillatorConfig::polar(1.0, 2, 0.45, 2.5, 1.5, -0.8)}) {
        const double period = 2.0 * pi / cfg.omega0;
        std::vector<double> times;
        for (int k = 0; k <= 16; ++k) times.push_back(period * k / 16.0);
        const auto states = evolve_schrodinger_sampled(analytic_state(cfg, 0.0, n),
                                                       CoefficientSchedule::constant(0.0, cfg.omega0, 0.0), times,
                                                       period / 16384, cfg.algebra());
        for (std::size_t k = 0; k < times.size(); ++k)
            worst_inf = std::max(worst_inf, 1.0 - fidelity(states[k], analytic_state(cfg, times[k], n)));
    }
    o.require(worst_inf <= 1e-7, "oracle infidelity " + sci(worst_inf));

    const auto cfg = OscillatorConfig::polar(1.3, 1, 0.4, 0.9, 1.0, 0.2);
    const auto ts = minima_times(cfg, 0.0, 10.0);
    bool minima = ts.size() >= 2;
    for (double t : ts) {
        const double h = uncertainty_at(cfg, t).heisenberg;
        for (int j = 1; j <= 20; ++j) {
            const double d = 0.05 * j / 20.0;
            minima = minima && h <= uncertainty_at(cfg, t - d).heisenberg && h <= uncertainty_at(cfg, t + d).heisenberg;
        }
    }
    o.require(minima, fmt::format("{} sampled minima", ts.size()));

    AsymptoticGates gates;
    gates.small_xi_max = 0.3;
    bool small_mono = true;
    double small_gap = 1.0;
    for (double x : {0.3, 0.1, 0.03, 0.01}) {
        const auto c = OscillatorConfig::polar(1.0, 1, 0.4, 0.0, x, 0.5);
        const auto a = asymptotic_uncertainties(c, 0.6, AsymptoticRegime::small_argument, gates);
        const auto e = uncertainty_at(c, 0.6);
        const double gap = std::abs(a.heisenberg - e.heisenberg);
        small_mono = small_mono && gap < small_gap;
        small_gap = gap;
    }
    bool large_mono = true;
    double large_gap = 1.0;
    for (double x : {6.0, 12.0, 18.0, 24.0}) {
        const auto c = OscillatorConfig::polar(1.0, 1, 0.3, 0.0, x, 0.2);
        const auto a = asymptotic_uncertainties(c, 0.3, AsymptoticRegime::large_argument);
        const auto e = uncertainty_at(c, 0.3);
        const double gap = std::abs(a.heisenberg - e.heisenberg);
        large_mono = large_mono && gap < large_gap;
        large_gap = gap;
    }
    o.require(small_mono, "small-argument form converges, last gap " + sci(small_gap));
    o.require(large_mono, "large-argument form converges, last gap " + sci(large_gap));

    auto cal = OscillatorConfig::polar(1.2, 2, 0.3, 0.0, 1.4, 1.0);
    cal.l = calibrate_l(0.55, cal);
    const double round_trip = std::abs(uncertainty_at(cal, 0.0).sigma_x - 0.55) / 0.55;
    o.require(round_trip <= 1e-12, "calibration round trip " + sci(round_trip));
    return o;
}

std::map<std::string, std::string> snapshot(const fs::path& dir) {
    std::map<std::string, std::string> out;
    for (const auto& e : fs::recursive_directory_iterator(dir)) {
        if (!e.is_regular_file()) continue;
        std::ifstream in(e.path(), std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        out[fs::relative(e.path(), dir).string()] = ss.str();
    }
    return out;
}

Outcome ac11() {
    Outcome o;
    const fs::path root = fs::temp_directory_path() / ("parabose_acceptance_" + std::to_string(::getpid()));
    fs::remove_all(root);
    const std::pair<const char*, const char*> runs[] = {
        {"verify", "verify_default.cfg"}, {"svs-prob", "svs_prob.cfg"},   {"cs-prob", "cs_prob.cfg"},
        {"density", "density.cfg"},  {"weight", "weight.cfg"}, {"oscillator", "oscillator.cfg"},
        {"evolve", "evolve_sinusoidal.cfg"},
    };
    std::size_t files = 0;
    for (const auto& [command, file] : runs) {
        std::map<std::string, std::string> seen[2];
        for (int pass = 0; pass < 2; ++pass) {
            pb_session* s = nullptr;
            pb_session_create(&s);
            const fs::path dir = root / std::to_string(pass) / command;
            const std::string cfg = (fs::path(PARABOSE_CONFIG_DIR) / file).string();
            bool ok = pb_session_load_config(s, cfg.c_str()) == PB_OK && pb_session_set_seed(s, 42) == PB_OK &&
                      pb_session_run(s, command, dir.c_str()) == PB_OK;
            pb_session_destroy(s);
            if (!ok) {
                o.require(false, fmt::format("{} failed: {}", command, pb_last_error()));
                continue;
            }
            seen[pass] = snapshot(dir);
        }
        const bool same = !seen[0].empty() && seen[0] == seen[1];
        if (!same) o.require(false, fmt::format("{} output differs", command));
        files += seen[0].size();
    }
    fs::remove_all(root);
    o.require(o.pass, fmt::format("{} files identical across two runs", files));
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"AC1", ac1}, {"AC2", ac2}, {"AC3", ac3}, {"AC4", ac4},   {"AC5", ac5},   {"AC6", ac6},
        {"AC7", ac7}, {"AC8", ac8}, {"AC9", ac9}, {"AC10", ac10}, {"AC11", ac11},
    };
    int failed = 0;
    for (const auto& [name, run] : criteria) {
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("threw: ") + e.what();
        }
        if (!o.pass) ++failed;
        fmt::print("{} {}  {}\n", name, o.pass ? "PASS" : "FAIL", o.detail);
        std::fflush(stdout);
    }
    fmt::print("{} of {} criteria passed\n", criteria.size() - std::size_t(failed), criteria.size());
    return failed == 0 ? 0 : 1;
}
