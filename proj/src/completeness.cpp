#include "parabose/completeness.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "parabose/error.hpp"
#include "parabose/quadrature.hpp"
#include "parabose/specfun.hpp"
#include "parabose/states.hpp"

namespace parabose {

namespace {

void check_epsilon(double epsilon) {
    if (!std::isfinite(epsilon) || !(epsilon > 1.0))
        raise(ErrorKind::domain, "completeness weight needs epsilon > 1");
}

void check_nodes(int node_count) {
    if (node_count < 2 || node_count > 4096) raise(ErrorKind::configuration, "node count must be in [2, 4096]");
}

// int_0^1 (1-u)^(eps-2) h(u) du
template <class F>
double endpoint_integral(double epsilon, int nodes, EndpointRule rule, F h) {
    double sum = 0.0;
    if (rule == EndpointRule::jacobi) {
        const double a = epsilon - 2.0;
        const quadrature::Rule q = quadrature::gauss_jacobi(nodes, a, 0.0);
        for (std::size_t i = 0; i < q.nodes.size(); ++i) sum += q.weights[i] * h(0.5 * (1.0 + q.nodes[i]));
        return sum * std::exp2(-a - 1.0);
    }
    const quadrature::Rule q = quadrature::gauss_legendre(nodes);
    for (std::size_t i = 0; i < q.nodes.size(); ++i) {
        const double u = 0.5 * (1.0 + q.nodes[i]);
        sum += q.weights[i] * std::pow(1.0 - u, epsilon - 2.0) * h(u);
    }
    return 0.5 * sum;
}

}  // namespace

double weight(double epsilon, double r) {
    check_epsilon(epsilon);
    if (!(r >= 0.0 && r < 1.0)) raise(ErrorKind::domain, "r must lie in [0, 1)");
    const double s = (1.0 - r) * (1.0 + r);
    return (epsilon - 1.0) / (std::numbers::pi * s * s);
}

double weight_integral(double epsilon, double r_max) {
    check_epsilon(epsilon);
    if (!(r_max >= 0.0 && r_max < 1.0)) raise(ErrorKind::domain, "r_max must lie in [0, 1)");
    const double s = (1.0 - r_max) * (1.0 + r_max);
    return (epsilon - 1.0) / std::numbers::pi * (r_max / (2.0 * s) + 0.5 * std::atanh(r_max));
}

double diagonal_identity_value(double epsilon, std::size_t n, int node_count, EndpointRule rule) {
    check_epsilon(epsilon);
    check_nodes(node_count);
    const double nn = double(n);
    const double log_norm = specfun::log_gamma(nn + epsilon) - specfun::log_gamma(nn + 1.0) - specfun::log_gamma(epsilon);
    const double integral = endpoint_integral(epsilon, node_count, rule, [&](double u) { return std::pow(u, nn); });
    // 2 pi * (eps - 1)/pi * 1/2 from r dr = du/2
    return (epsilon - 1.0) * std::exp(log_norm) * integral;
}

double diagonal_identity_residual(double epsilon, std::size_t n, int node_count, EndpointRule rule) {
    const double coarse = diagonal_identity_value(epsilon, n, node_count, rule);
    const double fine = diagonal_identity_value(epsilon, n, 2 * node_count, rule);
    if (!std::isfinite(coarse) || !std::isfinite(fine) || std::abs(coarse - fine) > 1e-10)
        raise(ErrorKind::quadrature, "completeness quadrature not converged at n = " + std::to_string(n) +
                                         " (node-doubling gap " + std::to_string(std::abs(coarse - fine)) + ")");
    return std::abs(coarse - 1.0);
}

Eigen::MatrixXd identity_block(double epsilon, std::size_t block, int node_count) {
    check_epsilon(epsilon);
    check_nodes(node_count);
    if (block == 0 || block > 32) raise(ErrorKind::configuration, "block size must be in [1, 32]");
    const auto k = static_cast<Eigen::Index>(block);
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(k, k);
    for (std::size_t n = 0; n < block; ++n) {
        // |c_2n(sqrt u)|^2 carries (1-u)^eps; strip it so the rule sees the bare endpoint factor.
        auto h = [&](double u) {
            const cd c = svs_coefficient(SvsSpec{cd(std::sqrt(u), 0.0), epsilon, 0.0}, n);
            return std::norm(c) * std::pow(1.0 - u, -epsilon);
        };
        const auto i = static_cast<Eigen::Index>(n);
        m(i, i) = (epsilon - 1.0) * endpoint_integral(epsilon, node_count, EndpointRule::jacobi, h);
    }
    return m;
}

double identity_block_residual(double epsilon, std::size_t block, int node_count) {
    const Eigen::MatrixXd m = identity_block(epsilon, block, node_count);
    return (m - Eigen::MatrixXd::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff();
}

}  // namespace parabose
