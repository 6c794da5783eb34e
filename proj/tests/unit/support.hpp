#pragma once

#include <doctest.h>

#include <cmath>
#include <complex>

#include "parabose/error.hpp"

namespace testing {

using cd = std::complex<double>;

inline double rel_err(cd got, cd want) { return std::abs(got - want) / std::max(std::abs(want), 1e-300); }
inline double rel_err(double got, double want) { return std::abs(got - want) / std::max(std::abs(want), 1e-300); }

template <class F>
parabose::ErrorKind kind_of(F&& f) {
    try {
        f();
    } catch (const parabose::Error& e) {
        return e.kind();
    }
    FAIL("expected a parabose::Error");
    return parabose::ErrorKind::io;
}

}  // namespace testing
