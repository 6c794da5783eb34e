#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "app/config.hpp"
#include "app/output.hpp"

namespace parabose::app {

struct CommandResult {
    // 0 on success, 1 when a verification check failed.
    int exit_code = 0;
    std::string report;
    std::vector<std::filesystem::path> files;
};

struct CommandContext {
    const ScenarioConfig& config;
    std::filesystem::path out_dir;
    std::uint64_t seed = 1;
    CommandResult result;

    void emit(const std::string& name, const CsvTable& table);
};

const std::vector<std::string>& command_names();

CommandResult run_command(const std::string& name, const ScenarioConfig& config, const std::filesystem::path& out_dir,
                          std::uint64_t seed);

void run_verify(CommandContext& ctx);

}  // namespace parabose::app
