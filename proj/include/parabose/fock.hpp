#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "parabose/schedule.hpp"

namespace parabose {

using cd = std::complex<double>;
using OperatorMatrix = Eigen::MatrixXcd;

struct AlgebraParams {
    double epsilon = 0.5;
    double nu = 0.0;
    std::optional<int> ell;
    double length_scale = 1.0;
    double hbar = 1.0;

    // ell is filled in when epsilon = 2 ell + 1/2 exactly.
    static AlgebraParams from_epsilon(double epsilon, double length_scale = 1.0, double hbar = 1.0);
    static AlgebraParams from_ell(int ell, double length_scale = 1.0, double hbar = 1.0);
    void validate() const;
};

// The coordinate sector needs epsilon = 2 ell + 1/2.
int quantized_ell(const AlgebraParams& params);

struct FockVector {
    Eigen::VectorXcd amplitudes;
    // Set by constructors that had to rescale a residual above 1e-9.
    bool renormalized = false;

    std::size_t truncation() const { return static_cast<std::size_t>(amplitudes.size()); }
    double norm_squared() const { return amplitudes.squaredNorm(); }
    // Mass in the last `width` entries.
    double tail_mass(std::size_t width) const;
    FockVector resized(std::size_t n) const;
};

// <lhs|rhs> over the common leading block.
cd inner(const FockVector& lhs, const FockVector& rhs);

struct Ladder {
    OperatorMatrix a;
    OperatorMatrix a_dagger;
    OperatorMatrix reflection;
};

// <k-1|a|k>
double ladder_element(double epsilon, std::size_t k);

Ladder build_ladder(const AlgebraParams& params, std::size_t n);

OperatorMatrix build_hamiltonian(const AlgebraParams& params, cd alpha, double beta, double delta, std::size_t n);

enum class HamiltonianPath { banded, dense };

struct EvolveOptions {
    HamiltonianPath path = HamiltonianPath::banded;
    double halving_tolerance = 1e-8;
    double norm_tolerance = 1e-8;
    double tail_tolerance = 1e-12;
    std::size_t tail_width = 8;
};

// RK4 on i hbar dpsi/dt = H(t) psi, with a halved-step rerun; returns the fine run.
FockVector evolve_schrodinger(const FockVector& psi0, const CoefficientSchedule& schedule, double t_final, double dt,
                              const AlgebraParams& params, const EvolveOptions& options = {});

// Same, returning the state at each of the nondecreasing sample times (>= 0).
std::vector<FockVector> evolve_schrodinger_sampled(const FockVector& psi0, const CoefficientSchedule& schedule,
                                                   std::span<const double> times, double dt,
                                                   const AlgebraParams& params, const EvolveOptions& options = {});

// H(alpha, beta, delta) psi, by the banded or the dense route. Both give identical bits.
Eigen::VectorXcd apply_hamiltonian(const AlgebraParams& params, cd alpha, double beta, double delta,
                                   const Eigen::VectorXcd& psi, HamiltonianPath path);

}  // namespace parabose
