#include "parabose/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <map>
#include <mutex>

#include "parabose/error.hpp"
#include "parabose/specfun.hpp"

namespace parabose::quadrature {

Rule gauss_jacobi(int n, double a, double b) {
    if (n < 1) raise(ErrorKind::configuration, "gauss_jacobi: need at least one node");
    if (!(a > -1.0) || !(b > -1.0)) raise(ErrorKind::domain, "gauss_jacobi: exponents must exceed -1");
    Eigen::VectorXd diag(n);
    Eigen::VectorXd sub(std::max(n - 1, 1));
    const double ab = a + b;
    for (int k = 0; k < n; ++k) {
        const double s = 2.0 * k + ab;
        diag(k) = (k == 0) ? (b - a) / (ab + 2.0) : (b * b - a * a) / (s * (s + 2.0));
    }
    for (int k = 1; k < n; ++k) {
        const double s = 2.0 * k + ab;
        const double beta = 4.0 * k * (k + a) * (k + b) * (k + ab) / (s * s * (s + 1.0) * (s - 1.0));
        sub(k - 1) = std::sqrt(beta);
    }
    const double mu0 = std::exp((ab + 1.0) * std::log(2.0) + specfun::log_gamma(a + 1.0) +
                                specfun::log_gamma(b + 1.0) - specfun::log_gamma(ab + 2.0));
    Rule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    if (n == 1) {
        rule.nodes[0] = diag(0);
        rule.weights[0] = mu0;
        return rule;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub.head(n - 1), Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success) raise(ErrorKind::quadrature, "gauss_jacobi: eigen-solve failed");
    for (int k = 0; k < n; ++k) {
        rule.nodes[k] = solver.eigenvalues()(k);
        const double v = solver.eigenvectors()(0, k);
        rule.weights[k] = mu0 * v * v;
    }
    return rule;
}

Rule gauss_legendre(int n) {
    static std::mutex mutex;
    static std::map<int, Rule> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, gauss_jacobi(n, 0.0, 0.0)).first;
    return it->second;
}

double integrate(const std::function<double(double)>& f, double lo, double hi, int panels, int order) {
    if (panels < 1) raise(ErrorKind::configuration, "integrate: need at least one panel");
    const Rule rule = gauss_legendre(order);
    const double width = (hi - lo) / panels;
    double total = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double mid = lo + (p + 0.5) * width;
        double part = 0.0;
        for (std::size_t k = 0; k < rule.nodes.size(); ++k) part += rule.weights[k] * f(mid + 0.5 * width * rule.nodes[k]);
        total += 0.5 * width * part;
    }
    return total;
}

}  // namespace parabose::quadrature
