#pragma once

#include <stdexcept>
#include <string>

namespace parabose {

enum class ErrorKind {
    domain,
    configuration,
    truncation,
    norm_drift,
    tail_mass,
    step_halving,
    mu_drift,
    crossing,
    squeeze_blowup,
    schedule,
    overflow,
    quadrature,
    quantization,
    mapping,
    io,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] void raise(ErrorKind kind, const std::string& what);

inline void require(bool cond, ErrorKind kind, const char* what) {
    if (!cond) raise(kind, what);
}

}  // namespace parabose
