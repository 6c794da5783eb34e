#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include "parabose/parabose.h"

namespace {

int exit_code(pb_status s) {
    switch (s) {
    case PB_OK: return 0;
    case PB_ERR_CHECK_FAILED: return 1;
    case PB_ERR_CONFIG:
    case PB_ERR_INVALID_ARGUMENT: return 2;
    default: return 3;
    }
}

int fail(pb_status s) {
    std::fprintf(stderr, "parabose: %s: %s\n", pb_status_string(s), pb_last_error());
    return exit_code(s);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Para-Bose squeezed and coherent states: figure data and verification"};
    app.require_subcommand(1);

    std::string config;
    std::string out;
    std::vector<std::string> overrides;
    std::uint64_t seed = 1;

    const std::vector<std::pair<std::string, std::string>> commands = {
        {"svs-prob", "squeezed-vacuum transition probabilities, one file per epsilon"},
        {"cs-prob", "coherent-state transition probabilities, one file per epsilon"},
        {"density", "coordinate wavefunction and density, one file per ell"},
        {"weight", "completeness weight function"},
        {"oscillator", "time-independent oscillator means, uncertainties and probabilities"},
        {"verify", "run the invariant suite and write a pass/fail report"},
        {"evolve", "compare the truncated Schroedinger evolution with the analytic state"},
    };
    for (const auto& [name, help] : commands) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("--config", config, "scenario file (key = value lines)")->check(CLI::ExistingFile);
        sub->add_option("--out", out, "output directory (default: output.dir or .)");
        sub->add_option("--set", overrides, "key=value override, repeatable");
        sub->add_option("--seed", seed, "seed for randomized checks");
    }
    CLI11_PARSE(app, argc, argv);
    const std::string command = app.get_subcommands().front()->get_name();

    pb_session* raw = nullptr;
    if (pb_status s = pb_session_create(&raw); s != PB_OK) return fail(s);
    std::unique_ptr<pb_session, decltype(&pb_session_destroy)> session(raw, pb_session_destroy);

    if (!config.empty())
        if (pb_status s = pb_session_load_config(session.get(), config.c_str()); s != PB_OK) return fail(s);
    for (const auto& o : overrides)
        if (pb_status s = pb_session_set(session.get(), o.c_str()); s != PB_OK) return fail(s);
    pb_session_set_seed(session.get(), seed);

    const pb_status s = pb_session_run(session.get(), command.c_str(), out.empty() ? nullptr : out.c_str());
    std::fputs(pb_session_report(session.get()), stdout);
    if (s != PB_OK) return fail(s);
    return 0;
}
