#include "parabose/states.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "parabose/error.hpp"
#include "parabose/specfun.hpp"

namespace parabose {

namespace {

using specfun::log_gamma;
using specfun::RealOrder;

constexpr double kSvsTail = 1e-14;
constexpr double kCsPairFloor = 1e-16;
constexpr double kCsTail = 1e-13;
constexpr double kRenormTolerance = 1e-9;
constexpr std::size_t kMaxPairs = std::size_t{1} << 21;
constexpr double kRescale = 1e100;

double one_minus_norm(cd zeta) {
    const double r = std::abs(zeta);
    return (1.0 - r) * (1.0 + r);
}

void check_epsilon(double epsilon) {
    if (!std::isfinite(epsilon) || epsilon < 0.5) raise(ErrorKind::domain, "epsilon must be finite and >= 1/2");
}

void check_zeta(cd zeta, double limit) {
    if (!std::isfinite(zeta.real()) || !std::isfinite(zeta.imag()) || !(std::abs(zeta) < limit))
        raise(ErrorKind::domain, "|zeta| must be below 1");
}

void check_xi(cd xi) {
    if (!std::isfinite(xi.real()) || !std::isfinite(xi.imag())) raise(ErrorKind::domain, "xi must be finite");
}

// Principal argument; the negative real axis is approached from above.
double arg_from_above(cd z) {
    if (z.imag() == 0.0) return std::arg(cd(z.real(), 0.0));
    return std::arg(z);
}

std::size_t checked_truncation(std::optional<std::size_t> requested, std::size_t required) {
    if (!requested) return required;
    if (*requested < required)
        raise(ErrorKind::truncation, "truncation " + std::to_string(*requested) + " is below the required " + std::to_string(required));
    return *requested;
}

void renormalize(FockVector& v) {
    const double n2 = v.norm_squared();
    if (std::abs(n2 - 1.0) > kRenormTolerance) {
        if (!(n2 > 0.0) || !std::isfinite(n2)) raise(ErrorKind::truncation, "state amplitudes vanished or overflowed");
        v.amplitudes /= std::sqrt(n2);
        v.renormalized = true;
    }
}

// Unnormalized Q_k^alpha = (-zeta)^k L_k^alpha(xi^2 / 2 zeta) with value cur * exp(log_scale).
struct QSequence {
    double alpha;
    cd b;
    cd zeta;
    cd prev{0.0, 0.0};
    cd cur{1.0, 0.0};
    double log_scale = 0.0;
    std::size_t k = 0;

    QSequence(double alpha_, cd zeta_, cd xi) : alpha(alpha_), b(0.5 * xi * xi), zeta(zeta_) {}

    void advance() {
        const double kk = double(k);
        const cd next = ((b - zeta * (2.0 * kk + 1.0 + alpha)) * cur - (kk + alpha) * zeta * zeta * prev) / (kk + 1.0);
        prev = cur;
        cur = next;
        ++k;
        const double m = std::max(std::abs(cur), std::abs(prev));
        if (m > kRescale) {
            cur /= kRescale;
            prev /= kRescale;
            log_scale += std::log(kRescale);
        } else if (m > 0.0 && m < 1.0 / kRescale) {
            cur *= kRescale;
            prev *= kRescale;
            log_scale -= std::log(kRescale);
        }
    }

    double log_abs() const {
        const double a = std::abs(cur);
        return a > 0.0 ? std::log(a) + log_scale : -std::numeric_limits<double>::infinity();
    }
};

struct Prefactor {
    double log_mod;  // ln |p|
    double phase;
};

Prefactor cs_prefactor(const CsSpec& s) {
    const double om = one_minus_norm(s.zeta);
    const double y = std::norm(s.xi) / om;
    const cd zx = std::conj(s.zeta) * s.xi * s.xi;
    const double log_mod2 = s.epsilon * std::log(om) + zx.real() / om - detail::log_bessel_pair_reduced(s.epsilon, y);
    const double arg_xi = (s.xi == cd(0.0, 0.0)) ? 0.0 : arg_from_above(s.xi);
    return {0.5 * log_mod2, (s.epsilon - 1.0) * arg_xi + zx.imag() / (2.0 * om) + s.theta_cs};
}

// Normalized recurrence for (c_{2k}, c_{2k+1}).
class CsPairs {
public:
    explicit CsPairs(const CsSpec& s)
        : spec_(s), pre_(cs_prefactor(s)), b_(0.5 * s.xi * s.xi), odd_factor_(s.xi / std::numbers::sqrt2) {
        q_ = 1.0;
        r_ = 1.0 / std::sqrt(s.epsilon);
        log_scale_ = -0.5 * log_gamma(s.epsilon);
    }

    std::pair<cd, cd> current() const {
        const cd unit = std::polar(1.0, pre_.phase);
        const double mag = std::exp(pre_.log_mod + log_scale_);
        return {unit * (mag * q_), unit * (mag * odd_factor_ * r_)};
    }

    void advance() {
        const double kk = double(k_);
        const double ae = spec_.epsilon - 1.0;
        const double ao = spec_.epsilon;
        const cd z = spec_.zeta;
        const cd z2 = z * z;
        const cd qn = ((b_ - z * (2.0 * kk + 1.0 + ae)) * q_ - z2 * std::sqrt(kk * (kk + ae)) * q_prev_) /
                      std::sqrt((kk + 1.0) * (kk + ae + 1.0));
        const cd rn = ((b_ - z * (2.0 * kk + 1.0 + ao)) * r_ - z2 * std::sqrt(kk * (kk + ao)) * r_prev_) /
                      std::sqrt((kk + 1.0) * (kk + ao + 1.0));
        q_prev_ = q_;
        r_prev_ = r_;
        q_ = qn;
        r_ = rn;
        ++k_;
        const double m = std::max({std::abs(q_), std::abs(r_), std::abs(q_prev_), std::abs(r_prev_)});
        double f = 1.0;
        if (m > kRescale) f = 1.0 / kRescale;
        else if (m > 0.0 && m < 1.0 / kRescale) f = kRescale;
        if (f != 1.0) {
            q_ *= f;
            r_ *= f;
            q_prev_ *= f;
            r_prev_ *= f;
            log_scale_ -= std::log(f);
        }
    }

private:
    CsSpec spec_;
    Prefactor pre_;
    cd b_;
    cd odd_factor_;
    cd q_, r_, q_prev_{0.0, 0.0}, r_prev_{0.0, 0.0};
    double log_scale_ = 0.0;
    std::size_t k_ = 0;
};

void check_cs_spec(const CsSpec& s) {
    check_epsilon(s.epsilon);
    check_zeta(s.zeta, 1.0 - 1e-6 + 1e-15);
    check_xi(s.xi);
    if (std::abs(s.xi) > 50.0) raise(ErrorKind::domain, "|xi| must not exceed 50");
}

}  // namespace

namespace detail {

double svs_transition_signed(cd zeta, double epsilon, std::size_t n, double sign) {
    check_epsilon(epsilon);
    check_zeta(zeta, 1.0);
    const double z2 = std::norm(zeta);
    const double pre = epsilon * std::log1p(-sign * z2);
    if (z2 == 0.0) return n == 0 ? std::exp(pre) : 0.0;
    const double nn = double(n);
    return std::exp(pre + log_gamma(nn + epsilon) - log_gamma(nn + 1.0) - log_gamma(epsilon) + nn * std::log(z2));
}

double log_bessel_pair_reduced(double epsilon, double y) {
    if (y == 0.0) return -log_gamma(epsilon);
    if (y <= 3.0) {
        const double e0 = specfun::bessel_i_reduced(RealOrder{epsilon - 1.0}, y).real();
        const double e1 = specfun::bessel_i_reduced(RealOrder{epsilon}, y).real();
        return std::log(e0 + 0.5 * y * e1);
    }
    const double s0 = specfun::bessel_i_scaled(RealOrder{epsilon - 1.0}, y).real();
    const double s1 = specfun::bessel_i_scaled(RealOrder{epsilon}, y).real();
    return (1.0 - epsilon) * std::log(0.5 * y) + y + std::log(s0 + s1);
}

}  // namespace detail

std::size_t svs_required_truncation(const SvsSpec& spec) {
    check_epsilon(spec.epsilon);
    check_zeta(spec.zeta, 1.0);
    const double z2 = std::norm(spec.zeta);
    if (z2 == 0.0) return 2;
    const double eps = spec.epsilon;
    const double log_z2 = std::log(z2);
    double lp = eps * std::log1p(-z2);
    const double log_target = std::log(kSvsTail);
    for (std::size_t m = 1; m <= kMaxPairs; ++m) {
        const double mm = double(m);
        lp += log_z2 + std::log((mm - 1.0 + eps) / mm);
        const double q = z2 * std::max(1.0, (mm + eps) / (mm + 1.0));
        if (q < 1.0 && lp - std::log1p(-q) < log_target) return 2 * m;
    }
    raise(ErrorKind::truncation, "svs: required truncation exceeds the cap");
}

cd svs_coefficient(const SvsSpec& spec, std::size_t n) {
    check_epsilon(spec.epsilon);
    check_zeta(spec.zeta, 1.0);
    const double om = one_minus_norm(spec.zeta);
    const double lead = 0.5 * spec.epsilon * std::log(om);
    if (n == 0) return std::polar(std::exp(lead), spec.theta_svs);
    if (spec.zeta == cd(0.0, 0.0)) return {0.0, 0.0};
    const double nn = double(n);
    const double lm = lead + nn * std::log(std::abs(spec.zeta)) +
                      0.5 * (log_gamma(nn + spec.epsilon) - log_gamma(nn + 1.0) - log_gamma(spec.epsilon));
    return std::polar(std::exp(lm), spec.theta_svs + nn * std::arg(-spec.zeta));
}

FockVector svs_amplitudes(const SvsSpec& spec, std::optional<std::size_t> truncation) {
    check_zeta(spec.zeta, 1.0 - 1e-6 + 1e-15);
    const std::size_t n = checked_truncation(truncation, svs_required_truncation(spec));
    if (n % 2 != 0) raise(ErrorKind::configuration, "svs truncation must be even");
    FockVector v;
    v.amplitudes = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(n));
    const double eps = spec.epsilon;
    double lm = 0.5 * eps * std::log(one_minus_norm(spec.zeta));
    v.amplitudes[0] = std::polar(std::exp(lm), spec.theta_svs);
    if (spec.zeta != cd(0.0, 0.0)) {
        const double log_r = std::log(std::abs(spec.zeta));
        const double step = std::arg(-spec.zeta);
        for (std::size_t k = 1; 2 * k < n; ++k) {
            const double kk = double(k);
            lm += log_r + 0.5 * std::log((kk - 1.0 + eps) / kk);
            v.amplitudes[static_cast<Eigen::Index>(2 * k)] = std::polar(std::exp(lm), spec.theta_svs + kk * step);
        }
    }
    renormalize(v);
    return v;
}

double svs_transition(cd zeta, double epsilon, std::size_t n) {
    return detail::svs_transition_signed(zeta, epsilon, n, 1.0);
}

cd svs_overlap(cd zeta1, cd zeta2, double epsilon, double phase_integral) {
    check_epsilon(epsilon);
    check_zeta(zeta1, 1.0);
    check_zeta(zeta2, 1.0);
    const double mod = 0.5 * epsilon * (std::log(one_minus_norm(zeta1)) + std::log(one_minus_norm(zeta2)));
    const cd cross = -epsilon * std::log(1.0 - std::conj(zeta1) * zeta2);
    return std::exp(mod + cross + cd(0.0, epsilon * phase_integral));
}

cd svs_overlap(const SvsSpec& lhs, const SvsSpec& rhs) {
    if (lhs.epsilon != rhs.epsilon) raise(ErrorKind::domain, "svs_overlap: epsilon mismatch");
    return svs_overlap(lhs.zeta, rhs.zeta, lhs.epsilon, 0.0) * std::polar(1.0, rhs.theta_svs - lhs.theta_svs);
}

std::size_t cs_required_truncation(const CsSpec& spec) {
    check_cs_spec(spec);
    const double z2 = std::norm(spec.zeta);
    CsPairs pairs(spec);
    double cumulative = 0.0;
    double prev_mass = 0.0;
    for (std::size_t k = 0; k < kMaxPairs; ++k) {
        const auto [ce, co] = pairs.current();
        const double mass = std::norm(ce) + std::norm(co);
        if (!std::isfinite(mass)) raise(ErrorKind::overflow, "cs: amplitude overflow");
        cumulative += mass;
        if (k >= 1 && cumulative > 0.5 && mass < kCsPairFloor) {
            double ratio = 0.0;
            if (mass > 0.0) ratio = prev_mass > 0.0 ? mass / prev_mass : 2.0;
            const double q = std::max(ratio, z2);
            if (ratio < 1.0 && q < 1.0 && mass * q / (1.0 - q) < kCsTail) return 2 * (k + 1);
        }
        prev_mass = mass;
        pairs.advance();
    }
    raise(ErrorKind::truncation, "cs: required truncation exceeds the cap");
}

FockVector cs_amplitudes(const CsSpec& spec, std::optional<std::size_t> truncation) {
    const std::size_t n = checked_truncation(truncation, cs_required_truncation(spec));
    FockVector v;
    v.amplitudes = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(n));
    CsPairs pairs(spec);
    for (std::size_t k = 0; 2 * k < n; ++k) {
        const auto [ce, co] = pairs.current();
        v.amplitudes[static_cast<Eigen::Index>(2 * k)] = ce;
        if (2 * k + 1 < n) v.amplitudes[static_cast<Eigen::Index>(2 * k + 1)] = co;
        pairs.advance();
    }
    renormalize(v);
    return v;
}

namespace {

// ln |(-zeta)^m L_m^alpha(xi^2/2zeta)|, literal Laguerre when zeta is not tiny.
double log_abs_q(double alpha, cd zeta, cd xi, std::size_t m) {
    if (std::abs(zeta) >= 1e-4) {
        const cd l = specfun::laguerre(static_cast<int>(m), RealOrder{alpha}, xi * xi / (2.0 * zeta));
        const double a = std::abs(l);
        if (std::isfinite(a) && a > 0.0) return double(m) * std::log(std::abs(zeta)) + std::log(a);
        if (a == 0.0) return -std::numeric_limits<double>::infinity();
    }
    QSequence q(alpha, zeta, xi);
    for (std::size_t k = 0; k < m; ++k) q.advance();
    return q.log_abs();
}

}  // namespace

double cs_transition(cd zeta, cd xi, double epsilon, std::size_t n) {
    check_epsilon(epsilon);
    check_zeta(zeta, 1.0);
    check_xi(xi);
    const double om = one_minus_norm(zeta);
    const double y = std::norm(xi) / om;
    const std::size_t m = n / 2;
    const bool odd = n % 2 == 1;
    if (odd && xi == cd(0.0, 0.0)) return 0.0;
    double log_p2;
    if (y < 1e-200) {
        log_p2 = epsilon * std::log(om) + log_gamma(epsilon);
    } else {
        const double s0 = specfun::bessel_i_scaled(RealOrder{epsilon - 1.0}, y).real();
        const double s1 = specfun::bessel_i_scaled(RealOrder{epsilon}, y).real();
        log_p2 = (epsilon - 1.0) * std::log(0.5 * std::norm(xi)) + std::log(om) +
                 (std::conj(zeta) * xi * xi).real() / om - (y + std::log(s0 + s1));
    }
    const double mm = double(m);
    if (!odd) {
        const double lq = log_abs_q(epsilon - 1.0, zeta, xi, m);
        return std::exp(log_p2 + log_gamma(mm + 1.0) - log_gamma(mm + epsilon) + 2.0 * lq);
    }
    const double lq = log_abs_q(epsilon, zeta, xi, m);
    return std::exp(log_p2 + std::log(0.5 * std::norm(xi)) + log_gamma(mm + 1.0) - log_gamma(mm + epsilon + 1.0) + 2.0 * lq);
}

cd cs_overlap(const CsSpec& lhs, const CsSpec& rhs) {
    if (lhs.epsilon != rhs.epsilon) raise(ErrorKind::domain, "cs_overlap: epsilon mismatch");
    const std::size_t pairs = std::max(cs_required_truncation(lhs), cs_required_truncation(rhs)) / 2;
    const double eps = lhs.epsilon;
    const Prefactor p1 = cs_prefactor(lhs);
    const Prefactor p2 = cs_prefactor(rhs);
    const double lead = p1.log_mod + p2.log_mod;
    const cd odd_weight = 0.5 * std::conj(lhs.xi) * rhs.xi;
    QSequence q1(eps - 1.0, lhs.zeta, lhs.xi), q2(eps - 1.0, rhs.zeta, rhs.xi);
    QSequence r1(eps, lhs.zeta, lhs.xi), r2(eps, rhs.zeta, rhs.xi);
    cd sum(0.0, 0.0);
    for (std::size_t n = 0; n < pairs; ++n) {
        const double nn = double(n);
        const double lf = log_gamma(nn + 1.0);
        const double even_log = lead + lf - log_gamma(nn + eps) + q1.log_scale + q2.log_scale;
        const double odd_log = lead + lf - log_gamma(nn + eps + 1.0) + r1.log_scale + r2.log_scale;
        sum += std::exp(even_log) * (std::conj(q1.cur) * q2.cur);
        sum += std::exp(odd_log) * odd_weight * (std::conj(r1.cur) * r2.cur);
        q1.advance();
        q2.advance();
        r1.advance();
        r2.advance();
    }
    return sum * std::polar(1.0, p2.phase - p1.phase);
}

double mean_reflection(cd zeta, cd xi, double epsilon) {
    check_epsilon(epsilon);
    check_zeta(zeta, 1.0);
    check_xi(xi);
    if (xi == cd(0.0, 0.0)) return 1.0;
    const double y = std::norm(xi) / one_minus_norm(zeta);
    const double a = specfun::bessel_i_scaled(RealOrder{epsilon - 1.0}, y).real();
    const double b = specfun::bessel_i_scaled(RealOrder{epsilon}, y).real();
    return (a - b) / (a + b);
}

}  // namespace parabose
