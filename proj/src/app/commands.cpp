#include "app/commands.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "parabose/completeness.hpp"
#include "parabose/coordrep.hpp"
#include "parabose/dynamics.hpp"
#include "parabose/error.hpp"
#include "parabose/oscillator.hpp"
#include "parabose/states.hpp"

namespace parabose::app {

void CommandContext::emit(const std::string& name, const CsvTable& table) {
    const std::filesystem::path path = out_dir / name;
    atomic_write(path, table.render(config.precision()));
    result.files.push_back(path);
    if (config.flag("output.plot_script", false)) {
        std::filesystem::path script = path;
        script.replace_extension(".gp");
        atomic_write(script, plot_script(path, table.header()));
        result.files.push_back(script);
    }
    result.report += fmt::format("wrote {} ({} rows)\n", path.string(), table.rows());
}

namespace {

std::size_t count_at_least(const ScenarioConfig& c, const std::string& key, long long fallback, long long lo) {
    const long long v = c.integer(key, fallback);
    if (v < lo || v > 100000000) raise(ErrorKind::configuration, fmt::format("{} must be at least {}", key, lo));
    return static_cast<std::size_t>(v);
}

double positive(const ScenarioConfig& c, const std::string& key, double fallback) {
    const double v = c.real(key, fallback);
    if (!(v > 0.0)) raise(ErrorKind::configuration, key + " must be positive");
    return v;
}

std::vector<double> epsilons(const ScenarioConfig& c) {
    return c.reals("run.epsilons", {c.algebra().epsilon});
}

void cmd_svs_prob(CommandContext& ctx) {
    const ScenarioConfig& c = ctx.config;
    const cd zeta = c.zeta();
    const std::size_t n_max = count_at_least(c, "run.n_max", 60, 0);
    const double z2 = std::norm(zeta);
    for (double eps : epsilons(c)) {
        CsvTable t({"n", "P2n"});
        for (std::size_t n = 0; n <= n_max; ++n) {
            t.add({double(n), svs_transition(zeta, eps, n)});
            const double q = z2 * std::max(1.0, (double(n) + 1.0 + eps) / (double(n) + 2.0));
            if (q < 1.0 && svs_transition(zeta, eps, n + 1) / (1.0 - q) < 1e-15) break;
        }
        ctx.emit("svs_prob_eps" + tag(eps) + ".csv", t);
    }
}

void cmd_cs_prob(CommandContext& ctx) {
    const ScenarioConfig& c = ctx.config;
    const std::size_t n_max = count_at_least(c, "run.n_max", 40, 0);
    for (double eps : epsilons(c)) {
        CsvTable t({"n", "Pn"});
        for (std::size_t n = 0; n <= n_max; ++n) t.add({double(n), cs_transition(c.zeta(), c.xi(), eps, n)});
        ctx.emit("cs_prob_eps" + tag(eps) + ".csv", t);
    }
}

void cmd_density(CommandContext& ctx) {
    const ScenarioConfig& c = ctx.config;
    const AlgebraParams base = c.algebra();
    std::vector<long long> ells = c.integers("run.ells", {});
    if (ells.empty()) ells.push_back(quantized_ell(base));
    const std::vector<double> grid = hybrid_grid(positive(c, "run.x_min", 1e-3), positive(c, "run.x_max", 4.0),
                                                 count_at_least(c, "run.points", 401, 2), base.length_scale);
    for (long long ell : ells) {
        if (ell < 0 || ell > 1000) raise(ErrorKind::configuration, "run.ells entries must lie in [0, 1000]");
        const AlgebraParams p = AlgebraParams::from_ell(static_cast<int>(ell), base.length_scale, base.hbar);
        const CsSpec spec{c.zeta(), c.xi(), p.epsilon, 0.0};
        const WavefunctionGrid g = probability_density(spec, p, grid);
        CsvTable t({"x", "psi_re", "psi_im", "rho"});
        for (std::size_t i = 0; i < g.x_values.size(); ++i)
            t.add({g.x_values[i], g.psi_values[i].real(), g.psi_values[i].imag(), g.rho_values[i]});
        ctx.emit("density_ell" + std::to_string(ell) + ".csv", t);
        ctx.result.report += fmt::format("  ell={} half_line_norm={:.12g} parity_norm={:.12g} route_gap={:.3g}\n", ell,
                                         g.normalization, g.parity_normalization, g.route_discrepancy);
    }
}

void cmd_weight(CommandContext& ctx) {
    const ScenarioConfig& c = ctx.config;
    const double r_max = c.real("run.r_max", 0.95);
    if (!(r_max > 0.0 && r_max < 1.0)) raise(ErrorKind::configuration, "run.r_max must lie in (0, 1)");
    const std::size_t points = count_at_least(c, "run.r_points", 200, 2);
    for (double eps : epsilons(c)) {
        CsvTable t({"r", "w"});
        for (std::size_t i = 0; i < points; ++i) {
            const double r = r_max * double(i) / double(points - 1);
            t.add({r, weight(eps, r)});
        }
        ctx.emit("weight_eps" + tag(eps) + ".csv", t);
    }
}

void cmd_oscillator(CommandContext& ctx) {
    const ScenarioConfig& c = ctx.config;
    const AlgebraParams p = c.algebra();
    OscillatorConfig base;
    base.omega0 = positive(c, "schedule.beta", 1.0);
    base.ell = quantized_ell(p);
    base.zeta0 = c.zeta();
    base.xi0 = c.xi();
    base.l = p.length_scale;
    base.hbar = p.hbar;
    base.validate();
    const double t_final = positive(c, "run.t_final", 2.0 * std::numbers::pi / base.omega0);
    const std::size_t samples = count_at_least(c, "run.samples", 201, 2);
    const std::size_t n_max = count_at_least(c, "run.n_max", 40, 0);

    const bool sweep = c.has("run.zetas");
    std::vector<double> zetas = c.reals("run.zetas", {std::abs(base.zeta0)});
    const double zeta_arg = base.zeta0 == cd(0.0, 0.0) ? 0.0 : std::arg(base.zeta0);
    for (double za : zetas) {
        OscillatorConfig cfg = base;
        cfg.zeta0 = std::polar(za, zeta_arg);
        cfg.validate();
        const std::string suffix = sweep ? "_zeta" + tag(za) : "";
        CsvTable traj({"t", "x_mean", "p_mean", "sigma_x", "sigma_p", "heis", "sr"});
        for (std::size_t i = 0; i < samples; ++i) {
            const double t = t_final * double(i) / double(samples - 1);
            const PhaseSpacePoint m = mean_trajectories(cfg, t);
            const UncertaintyPoint u = uncertainty_at(cfg, t);
            traj.add({t, m.x, m.p, u.sigma_x, u.sigma_p, u.heisenberg, u.sr});
        }
        ctx.emit("oscillator" + suffix + ".csv", traj);
        CsvTable prob({"n", "Pn"});
        for (std::size_t n = 0; n <= n_max; ++n) prob.add({double(n), stationary_transition(cfg, n)});
        ctx.emit("oscillator_prob" + suffix + ".csv", prob);
    }
}

void cmd_evolve(CommandContext& ctx) {
    const ScenarioConfig& c = ctx.config;
    const AlgebraParams p = c.algebra();
    const CoefficientSchedule schedule = c.schedule();
    const double beta0 = schedule.at(0.0).beta;
    const double t_final = positive(c, "run.t_final", 2.0 * std::numbers::pi / beta0);
    const double dt = positive(c, "run.dt", t_final / 4096.0);
    const std::size_t n = count_at_least(c, "run.truncation", 128, 8);
    const std::size_t samples = count_at_least(c, "run.samples", 9, 2);
    const cd zeta0 = c.zeta();
    const cd xi0 = c.xi();

    std::vector<double> times;
    for (std::size_t i = 0; i < samples; ++i) times.push_back(t_final * double(i) / double(samples - 1));
    const FockVector psi0 = cs_amplitudes(CsSpec{zeta0, xi0, p.epsilon, 0.0}, n);
    const std::vector<FockVector> states = evolve_schrodinger_sampled(psi0, schedule, times, dt, p);
    const StateTrajectory traj = solve_zeta_xi(schedule, zeta0, xi0, p.epsilon, t_final, dt);
    const MotionIntegral mi = solve_fg(schedule, cd(1.0, 0.0), zeta0, cd(0.0, 0.0), t_final, dt);

    CsvTable t({"t", "fidelity", "norm", "eigen_residual"});
    for (std::size_t i = 0; i < samples; ++i) {
        const StateParams s = traj.at(times[i]);
        const FockVector analytic = cs_amplitudes(CsSpec{s.zeta, s.xi, p.epsilon, s.theta_cs}, n);
        const Eigen::VectorXcd& v = states[i].amplitudes;
        const double fidelity = std::norm(analytic.amplitudes.dot(v));
        const OperatorMatrix a = assemble_A(mi, times[i], p, n);
        const double residual = (a * v - xi0 * v).norm();
        t.add({times[i], fidelity, std::sqrt(states[i].norm_squared()), residual});
    }
    ctx.emit("evolve.csv", t);
}

}  // namespace

const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names = {"svs-prob", "cs-prob", "density", "weight",
                                                   "oscillator", "verify", "evolve"};
    return names;
}

CommandResult run_command(const std::string& name, const ScenarioConfig& config, const std::filesystem::path& out_dir,
                          std::uint64_t seed) {
    CommandContext ctx{config, out_dir.empty() ? std::filesystem::path(config.text("output.dir", ".")) : out_dir, seed,
                       {}};
    if (name == "svs-prob") cmd_svs_prob(ctx);
    else if (name == "cs-prob") cmd_cs_prob(ctx);
    else if (name == "density") cmd_density(ctx);
    else if (name == "weight") cmd_weight(ctx);
    else if (name == "oscillator") cmd_oscillator(ctx);
    else if (name == "evolve") cmd_evolve(ctx);
    else if (name == "verify") run_verify(ctx);
    else raise(ErrorKind::configuration, "unknown command " + name);
    return ctx.result;
}

}  // namespace parabose::app
