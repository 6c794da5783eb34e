#pragma once

#include <array>
#include <complex>
#include <vector>

#include "parabose/fock.hpp"
#include "parabose/schedule.hpp"

namespace parabose {

struct MotionIntegral {
    std::vector<double> times;
    std::vector<cd> f;
    std::vector<cd> g;
    std::vector<cd> f_dot;
    std::vector<cd> g_dot;
    cd phi0;
    double mu = 0.0;
    cd u;
    double max_mu_drift = 0.0;

    cd f_at(double t) const;
    cd g_at(double t) const;
};

struct StateParams {
    cd zeta;
    cd xi;
    cd z_eigen;
    double theta_svs = 0.0;
    double theta_cs = 0.0;
};

// zeta, xi and the phase integrals along a schedule. Phases start at 0 for t = 0.
struct StateTrajectory {
    double epsilon = 0.5;
    cd z_eigen;
    std::vector<double> times;
    // zeta, xi, J1 + i J2, chi with J1 = int Re(alpha zeta*) - beta, J2 = int delta, chi = int alpha* zeta - beta
    std::vector<std::array<cd, 4>> nodes;
    std::vector<std::array<cd, 4>> slopes;

    StateParams at(double t) const;
    // f(t)/f(0) = exp(-i chi(t))
    cd f_ratio(double t) const;
};

// f' = i(beta f - alpha* g), g' = i(alpha f - beta g), phi = phi0.
MotionIntegral solve_fg(const CoefficientSchedule& schedule, cd f0, cd g0, cd phi0, double t_final, double dt);

// zeta' = i alpha* zeta^2 - 2 i beta zeta + i alpha, xi' = i(alpha* zeta - beta) xi. f0 = 1 so z = xi0.
StateTrajectory solve_zeta_xi(const CoefficientSchedule& schedule, cd zeta0, cd xi0, double epsilon, double t_final,
                              double dt);

OperatorMatrix assemble_A(cd f, cd g, cd phi0, const AlgebraParams& params, std::size_t n);
OperatorMatrix assemble_A(const MotionIntegral& mi, double t, const AlgebraParams& params, std::size_t n);

}  // namespace parabose
