#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <vector>

#include "parabose/error.hpp"

namespace parabose::detail {

using cd = std::complex<double>;

template <std::size_t K>
using OdeState = std::array<cd, K>;

template <std::size_t K>
struct OdePath {
    std::vector<double> t;
    std::vector<OdeState<K>> y;
    std::vector<OdeState<K>> dy;

    // Cubic Hermite between stored nodes.
    OdeState<K> at(double time) const {
        if (t.size() == 1 || time <= t.front()) return y.front();
        if (time >= t.back()) return y.back();
        const auto it = std::upper_bound(t.begin(), t.end(), time);
        const std::size_t hi = static_cast<std::size_t>(it - t.begin());
        const std::size_t lo = hi - 1;
        const double h = t[hi] - t[lo];
        const double s = (time - t[lo]) / h;
        const double h00 = (1 + 2 * s) * (1 - s) * (1 - s);
        const double h10 = s * (1 - s) * (1 - s);
        const double h01 = s * s * (3 - 2 * s);
        const double h11 = s * s * (s - 1);
        OdeState<K> out;
        for (std::size_t k = 0; k < K; ++k)
            out[k] = h00 * y[lo][k] + h10 * h * dy[lo][k] + h01 * y[hi][k] + h11 * h * dy[hi][k];
        return out;
    }
};

template <std::size_t K>
OdeState<K> axpy(const OdeState<K>& y, double h, const OdeState<K>& k) {
    OdeState<K> out;
    for (std::size_t i = 0; i < K; ++i) out[i] = y[i] + h * k[i];
    return out;
}

// Fixed-step RK4 storing every node. `rhs(t, y)` returns dy/dt; `check(t, y)` may throw.
template <std::size_t K, class Rhs, class Check>
OdePath<K> rk4_path(Rhs& rhs, Check& check, const OdeState<K>& y0, double t_final, long steps) {
    OdePath<K> p;
    p.t.reserve(steps + 1);
    p.y.reserve(steps + 1);
    p.dy.reserve(steps + 1);
    OdeState<K> y = y0;
    check(0.0, y);
    p.t.push_back(0.0);
    p.y.push_back(y);
    p.dy.push_back(rhs(0.0, y));
    const double h = steps > 0 ? t_final / double(steps) : 0.0;
    for (long j = 0; j < steps; ++j) {
        const double t = double(j) * h;
        const OdeState<K>& k1 = p.dy.back();
        const OdeState<K> k2 = rhs(t + 0.5 * h, axpy(y, 0.5 * h, k1));
        const OdeState<K> k3 = rhs(t + 0.5 * h, axpy(y, 0.5 * h, k2));
        const OdeState<K> k4 = rhs(t + h, axpy(y, h, k3));
        for (std::size_t i = 0; i < K; ++i) y[i] += (h / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        const double tn = double(j + 1) * h;
        check(tn, y);
        p.t.push_back(tn);
        p.y.push_back(y);
        p.dy.push_back(rhs(tn, y));
    }
    return p;
}

// Runs with the step count implied by dt and again with twice as many; returns the fine path.
template <std::size_t K, class Rhs, class Check>
OdePath<K> rk4_checked(Rhs rhs, Check check, const OdeState<K>& y0, double t_final, double dt, double tolerance) {
    if (!(dt > 0.0) || !std::isfinite(dt)) raise(ErrorKind::configuration, "dt must be positive");
    if (!(t_final >= 0.0) || !std::isfinite(t_final)) raise(ErrorKind::configuration, "t_final must be finite and nonnegative");
    const long steps = t_final > 0.0 ? std::max(1L, static_cast<long>(std::ceil(t_final / dt - 1e-9))) : 0L;
    const OdePath<K> coarse = rk4_path<K>(rhs, check, y0, t_final, steps);
    OdePath<K> fine = rk4_path<K>(rhs, check, y0, t_final, 2 * steps);
    for (long j = 0; j <= steps; ++j) {
        for (std::size_t i = 0; i < K; ++i) {
            const cd a = coarse.y[j][i];
            const cd b = fine.y[2 * j][i];
            if (std::abs(a - b) > tolerance * std::max(1.0, std::abs(b)))
                raise(ErrorKind::step_halving, "halved-step rerun disagrees; reduce dt");
        }
    }
    return fine;
}

}  // namespace parabose::detail
