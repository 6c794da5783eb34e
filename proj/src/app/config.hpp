#pragma once

#include <complex>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "parabose/fock.hpp"
#include "parabose/schedule.hpp"

namespace parabose::app {

enum class ValueType { real, integer, text, real_list, int_list, flag };

struct Entry {
    std::string raw;
    int line = 0;
    std::string source;
};

// key = value lines, '#' comments, dotted keys from a closed schema.
class ScenarioConfig {
public:
    static ScenarioConfig parse(const std::string& text, const std::string& source = "<text>");
    static ScenarioConfig load(const std::filesystem::path& path);

    // "key=value"; replaces any earlier value.
    void set(const std::string& assignment);
    void set(const std::string& key, const std::string& value);

    bool has(const std::string& key) const;
    double real(const std::string& key, double fallback) const;
    long long integer(const std::string& key, long long fallback) const;
    std::string text(const std::string& key, const std::string& fallback) const;
    bool flag(const std::string& key, bool fallback) const;
    std::vector<double> reals(const std::string& key, const std::vector<double>& fallback) const;
    std::vector<long long> integers(const std::string& key, const std::vector<long long>& fallback) const;

    AlgebraParams algebra() const;
    CoefficientSchedule schedule() const;
    cd zeta() const;
    cd xi() const;
    int precision() const;
    const std::filesystem::path& base_dir() const { return base_dir_; }

private:
    void store(const std::string& key, const std::string& value, int line, const std::string& source);
    const Entry* find(const std::string& key) const;

    std::map<std::string, Entry> entries_;
    std::filesystem::path base_dir_ = ".";
};

ValueType schema_type(const std::string& key);

}  // namespace parabose::app
