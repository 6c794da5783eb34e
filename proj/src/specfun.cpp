#include "parabose/specfun.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "parabose/error.hpp"

namespace parabose::specfun {

namespace {

constexpr int kZetaTerms = 48;

// zeta(k) - 1 by Euler-Maclaurin with cutoff 20.
double zeta_minus_one(int k) {
    constexpr int cutoff = 20;
    constexpr std::array<double, 5> bernoulli{1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30, 5.0 / 66};
    double s = 0.0;
    for (int n = cutoff - 1; n >= 2; --n) s += std::pow(double(n), -k);
    const double nk = std::pow(double(cutoff), -k);
    s += cutoff * nk / (k - 1) + 0.5 * nk;
    double rising = k;
    double factorial = 2.0;
    double npow = nk / cutoff;
    for (int j = 1; j <= 5; ++j) {
        s += bernoulli[j - 1] / factorial * rising * npow;
        rising *= double(k + 2 * j - 1) * double(k + 2 * j);
        factorial *= double(2 * j + 1) * double(2 * j + 2);
        npow /= double(cutoff) * cutoff;
    }
    return s;
}

const std::array<double, kZetaTerms>& zeta_table() {
    static const std::array<double, kZetaTerms> table = [] {
        std::array<double, kZetaTerms> t{};
        for (int k = 2; k < kZetaTerms; ++k) t[k] = zeta_minus_one(k);
        return t;
    }();
    return table;
}

// sum_{k>=2} (-1)^k (zeta(k)-1) z^k / k, |z| <= 1/2
double zeta_tail_series(double z) {
    const auto& zt = zeta_table();
    double s = 0.0;
    double zk = -z;
    for (int k = 2; k < kZetaTerms; ++k) {
        zk *= -z;
        s += zt[k] * zk / k;
    }
    return s;
}

double stirling(double x) {
    constexpr std::array<double, 8> c{
        1.0 / 12, -1.0 / 360, 1.0 / 1260, -1.0 / 1680,
        1.0 / 1188, -691.0 / 360360, 1.0 / 156, -3617.0 / 122400};
    const double inv = 1.0 / x;
    const double inv2 = inv * inv;
    double corr = 0.0;
    double p = inv;
    for (double ck : c) {
        corr += ck * p;
        p *= inv2;
    }
    return (x - 0.5) * std::log(x) - x + 0.5 * std::log(2.0 * std::numbers::pi) + corr;
}

}  // namespace

double log_gamma(double x) {
    if (!std::isfinite(x) || x <= 0.0) raise(ErrorKind::domain, "log_gamma: argument must be positive and finite");
    constexpr double euler = 0.57721566490153286061;
    if (x < 0.5) return log_gamma(x + 1.0) - std::log(x);
    if (x < 1.5) {
        const double z = x - 1.0;
        return -euler * z + z - std::log1p(z) + zeta_tail_series(z);
    }
    if (x <= 2.5) {
        const double z = x - 2.0;
        return (1.0 - euler) * z + zeta_tail_series(z);
    }
    if (x >= 10.0) return stirling(x);
    double shift = 1.0;
    double y = x;
    while (y < 10.0) {
        shift *= y;
        y += 1.0;
    }
    return stirling(y) - std::log(shift);
}

cd laguerre(int n, RealOrder alpha, cd x) {
    if (n < 0) raise(ErrorKind::domain, "laguerre: degree must be nonnegative");
    if (!std::isfinite(alpha.value) || alpha.value <= -1.0) raise(ErrorKind::domain, "laguerre: order must be finite and > -1");
    if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) raise(ErrorKind::domain, "laguerre: argument must be finite");
    const double a = alpha.value;
    cd prev(1.0, 0.0);
    if (n == 0) return prev;
    cd cur = 1.0 + a - x;
    for (int k = 1; k < n; ++k) {
        cd next = ((2.0 * k + 1.0 + a - x) * cur - (k + a) * prev) / double(k + 1);
        prev = cur;
        cur = next;
    }
    return cur;
}

namespace {

// Sum_m (z^2/4)^m Gamma(kappa+1) / (m! Gamma(m+kappa+1)); leading term 1.
cd reduced_series(double kappa, cd z) {
    const cd q = 0.25 * z * z;
    cd term(1.0, 0.0);
    cd sum = term;
    const double mag = std::abs(q);
    for (int m = 1; m < 4000; ++m) {
        term *= q / (double(m) * (m + kappa));
        sum += term;
        if (m * m > mag && std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return sum;
}

struct Quad {
    __float128 re;
    __float128 im;
};

// Same sum carried in binary128, for arguments where double cancels badly.
cd reduced_series_wide(double kappa, cd z) {
    const __float128 zr = z.real();
    const __float128 zi = z.imag();
    const Quad q{(zr * zr - zi * zi) / 4, (zr * zi) / 2};
    Quad term{1, 0};
    Quad sum{1, 0};
    const double mag = std::abs(z) * std::abs(z) / 4;
    for (int m = 1; m < 4000; ++m) {
        const __float128 den = __float128(m) * (__float128(m) + kappa);
        const Quad t{(term.re * q.re - term.im * q.im) / den, (term.re * q.im + term.im * q.re) / den};
        term = t;
        sum.re += term.re;
        sum.im += term.im;
        const double tn = double(term.re * term.re + term.im * term.im);
        const double sn = double(sum.re * sum.re + sum.im * sum.im);
        if (m * m > mag && tn < 1e-40 * sn) break;
    }
    return {double(sum.re), double(sum.im)};
}

// exp(-Re z) I_kappa(z) for Re z >= 0 by the Hankel expansion; false if it does not reach full precision.
bool hankel_scaled(double kappa, cd z, cd& out) {
    const double mu = 4.0 * kappa * kappa;
    const cd inv = 1.0 / z;
    cd s1(0.0, 0.0);
    cd s2(0.0, 0.0);
    cd term(1.0, 0.0);
    bool converged = false;
    for (int k = 0; k < 200; ++k) {
        s1 += (k % 2 == 0) ? term : -term;
        s2 += term;
        const double factor = (mu - double(2 * k + 1) * double(2 * k + 1)) / (8.0 * (k + 1));
        const cd next = term * factor * inv;
        if (factor == 0.0 || std::abs(next) < 1e-17 * std::abs(s1)) {
            converged = true;
            break;
        }
        if (std::abs(next) > std::abs(term)) break;
        term = next;
    }
    if (!converged) return false;
    const cd pref = 1.0 / std::sqrt(2.0 * std::numbers::pi * z);
    const double sign = z.imag() >= 0.0 ? 1.0 : -1.0;
    const cd i(0.0, 1.0);
    const cd first = std::exp(cd(0.0, z.imag())) * pref * s1;
    const cd second = sign * i * std::exp(cd(0.0, sign * kappa * std::numbers::pi)) *
                      std::exp(cd(-2.0 * z.real(), -z.imag())) * pref * s2;
    out = first + second;
    return true;
}

void check_order(double kappa) {
    if (!std::isfinite(kappa) || kappa <= -1.0) raise(ErrorKind::domain, "bessel: order must be finite and > -1");
}

void check_argument(cd z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) raise(ErrorKind::domain, "bessel: argument must be finite");
    if (std::abs(z) > 1e3) raise(ErrorKind::domain, "bessel: |z| > 1e3 is out of range");
}

// Scaled value for Re z >= 0, z != 0.
cd scaled_right_half(double kappa, cd z) {
    const double r = std::abs(z);
    if (r >= 25.0) {
        cd out;
        if (hankel_scaled(kappa, z, out)) return out;
    }
    const double loss = r - z.real();
    const cd sum = (r <= 3.0 || loss <= 5.0) ? reduced_series(kappa, z) : reduced_series_wide(kappa, z);
    return sum * std::exp(kappa * std::log(0.5 * z) - log_gamma(kappa + 1.0) - z.real());
}

}  // namespace

cd bessel_i_scaled(RealOrder kappa, cd z) {
    check_order(kappa.value);
    check_argument(z);
    if (z == cd(0.0, 0.0)) {
        if (kappa.value == 0.0) return {1.0, 0.0};
        if (kappa.value > 0.0) return {0.0, 0.0};
        raise(ErrorKind::overflow, "bessel: I_kappa(0) is infinite for kappa < 0");
    }
    if (z.real() >= 0.0) return scaled_right_half(kappa.value, z);
    // I_kappa(z) = (z/2)^kappa E(z) with E even.
    const cd w = -z;
    const double turn = std::signbit(z.imag()) ? -std::numbers::pi : std::numbers::pi;
    return scaled_right_half(kappa.value, w) * std::exp(cd(0.0, kappa.value * turn));
}

cd bessel_i(RealOrder kappa, cd z) {
    const cd s = bessel_i_scaled(kappa, z);
    if (s == cd(0.0, 0.0)) return s;
    const double log_mag = std::abs(z.real()) + std::log(std::abs(s));
    if (log_mag > std::log(std::numeric_limits<double>::max())) raise(ErrorKind::overflow, "bessel: unscaled value overflows");
    return s * std::exp(std::abs(z.real()));
}

cd bessel_i_reduced(RealOrder kappa, cd z) {
    check_order(kappa.value);
    check_argument(z);
    const double r = std::abs(z);
    if (r <= 3.0) return reduced_series(kappa.value, z) * std::exp(-log_gamma(kappa.value + 1.0));
    const cd s = bessel_i_scaled(kappa, z);
    const cd expo = std::abs(z.real()) - kappa.value * std::log(0.5 * z);
    if (expo.real() + std::log(std::abs(s)) > std::log(std::numeric_limits<double>::max()))
        raise(ErrorKind::overflow, "bessel: reduced value overflows");
    return s * std::exp(expo);
}

}  // namespace parabose::specfun
