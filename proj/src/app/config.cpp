#include "app/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "parabose/error.hpp"

namespace parabose::app {

namespace {

const std::map<std::string, ValueType>& schema() {
    static const std::map<std::string, ValueType> s = {
        {"algebra.epsilon", ValueType::real},      {"algebra.ell", ValueType::integer},
        {"algebra.l", ValueType::real},            {"algebra.hbar", ValueType::real},
        {"schedule.family", ValueType::text},      {"schedule.alpha_re", ValueType::real},
        {"schedule.alpha_im", ValueType::real},    {"schedule.beta", ValueType::real},
        {"schedule.delta", ValueType::real},       {"schedule.alpha_amp_re", ValueType::real},
        {"schedule.alpha_amp_im", ValueType::real}, {"schedule.beta_amp", ValueType::real},
        {"schedule.delta_amp", ValueType::real},   {"schedule.drive_omega", ValueType::real},
        {"schedule.drive_phase", ValueType::real}, {"schedule.table", ValueType::text},
        {"state.zeta_re", ValueType::real},        {"state.zeta_im", ValueType::real},
        {"state.xi_re", ValueType::real},          {"state.xi_im", ValueType::real},
        {"state.zeta_abs", ValueType::real},       {"state.zeta_arg", ValueType::real},
        {"state.xi_abs", ValueType::real},         {"state.xi_arg", ValueType::real},
        {"run.t_final", ValueType::real},          {"run.dt", ValueType::real},
        {"run.truncation", ValueType::integer},    {"run.n_max", ValueType::integer},
        {"run.epsilons", ValueType::real_list},    {"run.ells", ValueType::int_list},
        {"run.zetas", ValueType::real_list},       {"run.x_min", ValueType::real},
        {"run.x_max", ValueType::real},            {"run.points", ValueType::integer},
        {"run.r_max", ValueType::real},            {"run.r_points", ValueType::integer},
        {"run.samples", ValueType::integer},       {"output.dir", ValueType::text},
        {"output.precision", ValueType::integer},  {"output.plot_script", ValueType::flag},
        {"verify.sabotage", ValueType::text},      {"verify.points", ValueType::integer},
    };
    return s;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::string where(const Entry& e) { return e.source + ":" + std::to_string(e.line) + ": "; }

std::optional<double> to_real(const std::string& s) {
    double v = 0.0;
    const char* end = s.data() + s.size();
    const auto r = std::from_chars(s.data(), end, v);
    if (r.ec != std::errc() || r.ptr != end || !std::isfinite(v)) return std::nullopt;
    return v;
}

std::optional<long long> to_integer(const std::string& s) {
    long long v = 0;
    const char* end = s.data() + s.size();
    const auto r = std::from_chars(s.data(), end, v);
    if (r.ec != std::errc() || r.ptr != end) return std::nullopt;
    return v;
}

std::optional<bool> to_flag(const std::string& s) {
    if (s == "true" || s == "1" || s == "yes") return true;
    if (s == "false" || s == "0" || s == "no") return false;
    return std::nullopt;
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(trim(item));
    return out;
}

void validate_value(const std::string& key, const Entry& e) {
    const ValueType t = schema_type(key);
    bool ok = true;
    switch (t) {
    case ValueType::real: ok = to_real(e.raw).has_value(); break;
    case ValueType::integer: ok = to_integer(e.raw).has_value(); break;
    case ValueType::flag: ok = to_flag(e.raw).has_value(); break;
    case ValueType::text: ok = !e.raw.empty(); break;
    case ValueType::real_list:
    case ValueType::int_list:
        for (const auto& item : split_list(e.raw))
            ok = ok && (t == ValueType::real_list ? to_real(item).has_value() : to_integer(item).has_value());
        break;
    }
    if (!ok) raise(ErrorKind::configuration, where(e) + "bad value '" + e.raw + "' for " + key);
}

}  // namespace

ValueType schema_type(const std::string& key) {
    const auto it = schema().find(key);
    if (it == schema().end()) raise(ErrorKind::configuration, "unknown key " + key);
    return it->second;
}

ScenarioConfig ScenarioConfig::parse(const std::string& text, const std::string& source) {
    ScenarioConfig cfg;
    std::istringstream in(text);
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        const std::string prefix = source + ":" + std::to_string(number) + ": ";
        if (eq == std::string::npos) raise(ErrorKind::configuration, prefix + "expected key = value");
        const std::string key = trim(line.substr(0, eq));
        if (!schema().count(key)) raise(ErrorKind::configuration, prefix + "unknown key " + key);
        if (cfg.entries_.count(key)) raise(ErrorKind::configuration, prefix + "duplicate key " + key);
        cfg.store(key, trim(line.substr(eq + 1)), number, source);
    }
    return cfg;
}

ScenarioConfig ScenarioConfig::load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) raise(ErrorKind::io, "cannot read config " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    ScenarioConfig cfg = parse(ss.str(), path.string());
    cfg.base_dir_ = path.parent_path().empty() ? std::filesystem::path(".") : path.parent_path();
    return cfg;
}

void ScenarioConfig::set(const std::string& assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string::npos) raise(ErrorKind::configuration, "override must look like key=value: " + assignment);
    set(trim(assignment.substr(0, eq)), trim(assignment.substr(eq + 1)));
}

void ScenarioConfig::set(const std::string& key, const std::string& value) {
    schema_type(key);
    store(key, value, 0, "--set");
}

void ScenarioConfig::store(const std::string& key, const std::string& value, int line, const std::string& source) {
    Entry e{value, line, source};
    validate_value(key, e);
    entries_[key] = e;
}

const Entry* ScenarioConfig::find(const std::string& key) const {
    schema_type(key);
    const auto it = entries_.find(key);
    return it == entries_.end() ? nullptr : &it->second;
}

bool ScenarioConfig::has(const std::string& key) const { return find(key) != nullptr; }

double ScenarioConfig::real(const std::string& key, double fallback) const {
    const Entry* e = find(key);
    return e ? *to_real(e->raw) : fallback;
}

long long ScenarioConfig::integer(const std::string& key, long long fallback) const {
    const Entry* e = find(key);
    return e ? *to_integer(e->raw) : fallback;
}

std::string ScenarioConfig::text(const std::string& key, const std::string& fallback) const {
    const Entry* e = find(key);
    return e ? e->raw : fallback;
}

bool ScenarioConfig::flag(const std::string& key, bool fallback) const {
    const Entry* e = find(key);
    return e ? *to_flag(e->raw) : fallback;
}

std::vector<double> ScenarioConfig::reals(const std::string& key, const std::vector<double>& fallback) const {
    const Entry* e = find(key);
    if (!e) return fallback;
    std::vector<double> out;
    for (const auto& item : split_list(e->raw)) out.push_back(*to_real(item));
    return out;
}

std::vector<long long> ScenarioConfig::integers(const std::string& key, const std::vector<long long>& fallback) const {
    const Entry* e = find(key);
    if (!e) return fallback;
    std::vector<long long> out;
    for (const auto& item : split_list(e->raw)) out.push_back(*to_integer(item));
    return out;
}

AlgebraParams ScenarioConfig::algebra() const {
    const double l = real("algebra.l", 1.0);
    const double hbar = real("algebra.hbar", 1.0);
    if (has("algebra.ell")) {
        const long long ell = integer("algebra.ell", 0);
        if (ell < 0 || ell > 100000) raise(ErrorKind::configuration, where(*find("algebra.ell")) + "ell out of range");
        if (has("algebra.epsilon") && real("algebra.epsilon", 0.0) != 2.0 * double(ell) + 0.5)
            raise(ErrorKind::configuration, where(*find("algebra.epsilon")) + "epsilon disagrees with ell");
        return AlgebraParams::from_ell(static_cast<int>(ell), l, hbar);
    }
    return AlgebraParams::from_epsilon(real("algebra.epsilon", 0.5), l, hbar);
}

CoefficientSchedule ScenarioConfig::schedule() const {
    const std::string family = text("schedule.family", "constant");
    const cd alpha(real("schedule.alpha_re", 0.0), real("schedule.alpha_im", 0.0));
    const double beta = real("schedule.beta", 1.0);
    const double delta = real("schedule.delta", 0.0);
    if (family == "constant") return CoefficientSchedule::constant(alpha, beta, delta);
    if (family == "sinusoidal") {
        SinusoidalTerms t;
        t.alpha0 = alpha;
        t.alpha1 = cd(real("schedule.alpha_amp_re", 0.0), real("schedule.alpha_amp_im", 0.0));
        t.beta0 = beta;
        t.beta1 = real("schedule.beta_amp", 0.0);
        t.delta0 = delta;
        t.delta1 = real("schedule.delta_amp", 0.0);
        t.omega = real("schedule.drive_omega", 1.0);
        t.phase = real("schedule.drive_phase", 0.0);
        return CoefficientSchedule::sinusoidal(t);
    }
    if (family == "tabulated") {
        if (!has("schedule.table")) raise(ErrorKind::configuration, "tabulated schedule needs schedule.table");
        std::filesystem::path p = text("schedule.table", "");
        if (p.is_relative()) p = base_dir_ / p;
        return CoefficientSchedule::from_csv(p.string());
    }
    const Entry* e = find("schedule.family");
    raise(ErrorKind::configuration, where(*e) + "schedule.family must be constant, sinusoidal or tabulated");
}

namespace {

cd complex_from(const ScenarioConfig& c, const std::string& name, cd fallback) {
    const bool cart = c.has("state." + name + "_re") || c.has("state." + name + "_im");
    const bool pol = c.has("state." + name + "_abs") || c.has("state." + name + "_arg");
    if (cart && pol) raise(ErrorKind::configuration, "state." + name + " given in both cartesian and polar form");
    if (pol) return std::polar(c.real("state." + name + "_abs", 0.0), c.real("state." + name + "_arg", 0.0));
    if (cart) return {c.real("state." + name + "_re", 0.0), c.real("state." + name + "_im", 0.0)};
    return fallback;
}

}  // namespace

cd ScenarioConfig::zeta() const { return complex_from(*this, "zeta", cd(0.3, 0.0)); }
cd ScenarioConfig::xi() const { return complex_from(*this, "xi", cd(0.0, 1.0)); }

int ScenarioConfig::precision() const {
    const long long p = integer("output.precision", 12);
    if (p < 1 || p > 17) raise(ErrorKind::configuration, "output.precision must be in [1, 17]");
    return static_cast<int>(p);
}

}  // namespace parabose::app
