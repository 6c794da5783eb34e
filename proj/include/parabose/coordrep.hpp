#pragma once

#include <complex>
#include <span>
#include <vector>

#include "parabose/fock.hpp"
#include "parabose/states.hpp"

namespace parabose {

struct WavefunctionGrid {
    std::vector<double> x_values;
    std::vector<cd> psi_values;
    std::vector<double> rho_values;
    int ell = 0;
    AlgebraParams params;
    // Largest relative gap between the closed-form density and |psi|^2.
    double route_discrepancy = 0.0;
    // 2 * int_0^inf rho dx.
    double normalization = 0.0;
    // 2 * int_0^inf (|psi_even|^2 + |psi_odd|^2) dx, the norm of the parity-extended state.
    double parity_normalization = 0.0;
};

// psi = even + odd, split by the I_{eps-1} and I_eps terms; the odd part changes sign under x -> -x.
struct WavefunctionParts {
    cd even;
    cd odd;
};

// x^{2 ell} exp(-x^2/2l^2) / (l^{2 ell + 1/2} sqrt(Gamma(2 ell + 1/2))), x >= 0.
double vacuum_wavefunction(int ell, double l, double x);
double vacuum_wavefunction(const AlgebraParams& params, double x);

cd cs_wavefunction(const CsSpec& spec, const AlgebraParams& params, double x);
WavefunctionParts cs_wavefunction_parts(const CsSpec& spec, const AlgebraParams& params, double x);

// Gaussian closed form for ell = 0 with explicit phase rho_phase. Equals cs_wavefunction at ell = 0 up to the
// constant factor exp(i(theta_cs - rho_phase - arg(xi)/2)).
cd cs_wavefunction_gaussian(const CsSpec& spec, const AlgebraParams& params, double x, double rho_phase);

// Density from the real closed form, not through psi.
double density_closed_form(const CsSpec& spec, const AlgebraParams& params, double x);

// <x|n> for the para-Bose number states built on the even vacuum.
double number_state_wavefunction(std::size_t n, const AlgebraParams& params, double x);

// Half-line norm 2 int_0^inf rho dx by composite Gauss-Legendre with a node-doubling check.
// The literal half-line norm equals the parity-resolved one plus 4 int_0^inf Re(psi_even* psi_odd) dx, so it is 1
// only when that cross term vanishes (for example real zeta with imaginary xi).
double density_normalization(const CsSpec& spec, const AlgebraParams& params);
double parity_resolved_normalization(const CsSpec& spec, const AlgebraParams& params);
double vacuum_normalization(const AlgebraParams& params);

WavefunctionGrid probability_density(const CsSpec& spec, const AlgebraParams& params, std::span<const double> grid);

// Log-spaced on [x_min, 0.1 l) then linear up to x_max.
std::vector<double> hybrid_grid(double x_min, double x_max, std::size_t points, double l);

struct HamiltonianMapping {
    double mass = 0.0;
    double omega = 0.0;
    double omega_squared = 0.0;
    double cross = 0.0;
    double offset = 0.0;
};

HamiltonianMapping hamiltonian_mapping(cd alpha, double beta, double delta, const AlgebraParams& params);

// Max over a grid of |(l/sqrt2)(d/dx - (2eps-1)/2x + x/l^2) Psi0| with a 5-point derivative of step h.
double vacuum_annihilation_residual(const AlgebraParams& params, double x_lo, double x_hi, std::size_t points, double h);

}  // namespace parabose
