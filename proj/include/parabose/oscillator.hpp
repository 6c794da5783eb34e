#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "parabose/dynamics.hpp"
#include "parabose/fock.hpp"
#include "parabose/observables.hpp"
#include "parabose/states.hpp"

namespace parabose {

struct OscillatorConfig {
    double omega0 = 1.0;
    int ell = 0;
    cd zeta0;
    cd xi0;
    double l = 1.0;
    double hbar = 1.0;

    static OscillatorConfig polar(double omega0, int ell, double zeta_abs, double zeta_arg, double xi_abs,
                                  double xi_arg, double l = 1.0, double hbar = 1.0);

    double epsilon() const { return 2.0 * ell + 0.5; }
    double mass() const { return hbar / (l * l * omega0); }
    AlgebraParams algebra() const;
    void validate() const;
};

// zeta0 e^{-2i w t}, xi0 e^{-i w t}, theta = -eps w t, theta~ = -w t.
StateParams closed_form_parameters(const OscillatorConfig& cfg, double t);

CsSpec state_spec(const OscillatorConfig& cfg, double t);

// The evolved CS from cs_amplitudes at the closed-form parameters, with the branch of (xi)^(eps-1) continued
// from t = 0 so the amplitudes are continuous in t.
FockVector analytic_state(const OscillatorConfig& cfg, double t, std::size_t truncation);

struct PhaseSpacePoint {
    double x = 0.0;
    double p = 0.0;
};

PhaseSpacePoint initial_means(const OscillatorConfig& cfg);
PhaseSpacePoint mean_trajectories(const OscillatorConfig& cfg, double t);

struct UncertaintyPoint {
    double sigma_x = 0.0;
    double sigma_p = 0.0;
    double heisenberg = 0.0;
    double sr = 0.0;
    double mean_r = 1.0;
};

UncertaintyPoint uncertainty_at(const OscillatorConfig& cfg, double t);

// t_k = (theta_zeta - k pi)/(2 w) inside [t0, t1], ascending. theta_zeta = 0 when zeta0 = 0.
std::vector<double> minima_times(const OscillatorConfig& cfg, double t0, double t1);

// l = sigma_x0 sqrt((1+zeta0)/(1-zeta0) * 2/(1 + 4 ell R)); zeta0 must be real. l in cfg is ignored.
double calibrate_l(double sigma_x0, const OscillatorConfig& cfg);

// Closed form in the polar parameters; independent of t.
double stationary_transition(const OscillatorConfig& cfg, std::size_t n);

enum class AsymptoticRegime { small_argument, large_argument };

struct AsymptoticGates {
    double small_xi_max = 0.1;
    double small_zeta_max = 0.9;
    double large_y_min = 20.0;
};

struct AsymptoticUncertainties {
    double mean_r = 0.0;
    double heisenberg = 0.0;
    double sr = 0.0;
};

AsymptoticUncertainties asymptotic_uncertainties(const OscillatorConfig& cfg, double t, AsymptoticRegime regime,
                                                 const AsymptoticGates& gates = {});

}  // namespace parabose
