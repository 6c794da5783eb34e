#pragma once

#include <complex>

namespace parabose::specfun {

using cd = std::complex<double>;

// Order of I_kappa or superscript of L_n^alpha.
struct RealOrder {
    double value;
};

// ln Gamma(x) for x > 0.
double log_gamma(double x);

// Generalized Laguerre polynomial by upward recurrence in n.
cd laguerre(int n, RealOrder alpha, cd x);

// Modified Bessel function of the first kind, principal branch of z^kappa.
// kappa > -1, |z| <= 1e3. Throws overflow when the unscaled value does not fit.
cd bessel_i(RealOrder kappa, cd z);

// exp(-|Re z|) * I_kappa(z).
cd bessel_i_scaled(RealOrder kappa, cd z);

// I_kappa(z) / (z/2)^kappa, an entire even function of z.
cd bessel_i_reduced(RealOrder kappa, cd z);

}  // namespace parabose::specfun
