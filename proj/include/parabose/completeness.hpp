#pragma once

#include <Eigen/Dense>
#include <cstddef>

namespace parabose {

struct WeightSpec {
    double epsilon = 2.0;
    double r_max = 0.9;
    int node_count = 64;
};

// (epsilon - 1) / (pi (1 - r^2)^2); epsilon must exceed 1.
double weight(double epsilon, double r);

// int_0^r_max w(r) dr in closed form.
double weight_integral(double epsilon, double r_max);

// jacobi absorbs the (1-u)^(epsilon-2) endpoint into the rule; legendre samples it raw.
enum class EndpointRule { jacobi, legendre };

// 2 pi Gamma(n+eps)/(n! Gamma(eps)) int_0^1 (1-r^2)^eps r^(2n+1) w(r) dr, with node_count nodes and no
// convergence check.
double diagonal_identity_value(double epsilon, std::size_t n, int node_count = 64,
                               EndpointRule rule = EndpointRule::jacobi);

// |value - 1|. Compares node_count against 2 node_count nodes and raises a quadrature error when the two
// disagree by more than 1e-10.
double diagonal_identity_residual(double epsilon, std::size_t n, int node_count = 64,
                                  EndpointRule rule = EndpointRule::jacobi);

// Even-parity K x K block of int |zeta><zeta| w d^2 zeta; the angular integral is done exactly, so
// off-diagonal entries are 0. K <= 32.
Eigen::MatrixXd identity_block(double epsilon, std::size_t block, int node_count = 64);

// max |M - 1| over the even K x K block of int |zeta><zeta| w d^2 zeta, K <= 32.
double identity_block_residual(double epsilon, std::size_t block, int node_count = 64);

}  // namespace parabose
