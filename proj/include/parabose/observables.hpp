#pragma once

#include "parabose/fock.hpp"
#include "parabose/states.hpp"

namespace parabose {

struct Moments {
    double mean_x = 0.0;
    double mean_p = 0.0;
    double var_x = 0.0;
    double var_p = 0.0;
    double cov_xp = 0.0;
    double mean_r = 1.0;
};

struct UncertaintyProducts {
    // From the moments.
    double heisenberg = 0.0;
    double schrodinger_robertson = 0.0;
    // Closed forms in zeta and the mean reflection.
    double heisenberg_closed = 0.0;
    double sr_bound = 0.0;
};

Moments cs_moments(const CsSpec& spec, const AlgebraParams& params);

UncertaintyProducts uncertainty_products(const Moments& m, const AlgebraParams& params, cd zeta);

// Inverse of the mean map: xi from (mean_x, mean_p) at fixed zeta.
cd xi_from_means(double mean_x, double mean_p, cd zeta, const AlgebraParams& params);

// <psi|.|psi> with x = l(a + a+)/sqrt2, P = hbar(a - a+)/(i sqrt2 l) on the truncated basis.
Moments expectation_moments(const FockVector& psi, const AlgebraParams& params);

struct PhaseSpaceOperators {
    OperatorMatrix x;
    OperatorMatrix p;
};

PhaseSpaceOperators phase_space_operators(const AlgebraParams& params, std::size_t n);

}  // namespace parabose
