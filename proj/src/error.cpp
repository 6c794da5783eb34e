#include "parabose/error.hpp"

namespace parabose {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::domain: return "domain";
    case ErrorKind::configuration: return "configuration";
    case ErrorKind::truncation: return "truncation";
    case ErrorKind::norm_drift: return "norm-drift";
    case ErrorKind::tail_mass: return "tail-mass";
    case ErrorKind::step_halving: return "step-halving";
    case ErrorKind::mu_drift: return "mu-drift";
    case ErrorKind::crossing: return "crossing";
    case ErrorKind::squeeze_blowup: return "squeeze-blowup";
    case ErrorKind::schedule: return "schedule";
    case ErrorKind::overflow: return "overflow";
    case ErrorKind::quadrature: return "quadrature";
    case ErrorKind::quantization: return "quantization";
    case ErrorKind::mapping: return "mapping";
    case ErrorKind::io: return "io";
    }
    return "unknown";
}

void raise(ErrorKind kind, const std::string& what) {
    throw Error(kind, what);
}

}  // namespace parabose
