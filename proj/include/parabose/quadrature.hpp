#pragma once

#include <functional>
#include <vector>

namespace parabose::quadrature {

struct Rule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// Gauss rule for the weight (1-t)^a (1+t)^b on [-1, 1], a, b > -1 (Golub-Welsch).
Rule gauss_jacobi(int n, double a, double b);

Rule gauss_legendre(int n);

// Composite Gauss-Legendre over [lo, hi] with equal panels.
double integrate(const std::function<double(double)>& f, double lo, double hi, int panels, int order = 32);

}  // namespace parabose::quadrature
