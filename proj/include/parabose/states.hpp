#pragma once

#include <complex>
#include <cstddef>
#include <optional>

#include "parabose/fock.hpp"

namespace parabose {

struct SvsSpec {
    cd zeta;
    double epsilon = 0.5;
    double theta_svs = 0.0;
};

struct CsSpec {
    cd zeta;
    cd xi;
    double epsilon = 0.5;
    double theta_cs = 0.0;
};

// Smallest even N whose analytic tail bound is below 1e-14.
std::size_t svs_required_truncation(const SvsSpec& spec);

// Even-index amplitudes; the truncation may only be raised above the required one.
FockVector svs_amplitudes(const SvsSpec& spec, std::optional<std::size_t> truncation = std::nullopt);

// c_{2n}
cd svs_coefficient(const SvsSpec& spec, std::size_t n);

double svs_transition(cd zeta, double epsilon, std::size_t n);

// Closed form with phase exp(i(theta2 - theta1)).
cd svs_overlap(const SvsSpec& lhs, const SvsSpec& rhs);
// Closed form with phase exp(i epsilon * phase_integral), phase_integral = int Re[alpha (zeta2* - zeta1*)] dt.
cd svs_overlap(cd zeta1, cd zeta2, double epsilon, double phase_integral);

// Even N at which the pair mass and its geometric tail fall below 1e-13.
std::size_t cs_required_truncation(const CsSpec& spec);

FockVector cs_amplitudes(const CsSpec& spec, std::optional<std::size_t> truncation = std::nullopt);

double cs_transition(cd zeta, cd xi, double epsilon, std::size_t n);

cd cs_overlap(const CsSpec& lhs, const CsSpec& rhs);

// Expectation of the reflection operator in the CS.
double mean_reflection(cd zeta, cd xi, double epsilon);

namespace detail {

// P_{2n} with (1 - sign |zeta|^2)^epsilon as prefactor; sign = +1 is the physical value.
double svs_transition_signed(cd zeta, double epsilon, std::size_t n, double sign);

// ln of I_{eps-1}(y)/(y/2)^{eps-1} + (y/2) I_eps(y)/(y/2)^eps.
double log_bessel_pair_reduced(double epsilon, double y);

}  // namespace detail

}  // namespace parabose
