#include "parabose/fock.hpp"

#include <algorithm>
#include <cmath>

#include "parabose/error.hpp"

namespace parabose {

AlgebraParams AlgebraParams::from_epsilon(double epsilon, double length_scale, double hbar) {
    AlgebraParams p;
    p.epsilon = epsilon;
    p.nu = 2.0 * epsilon - 1.0;
    p.length_scale = length_scale;
    p.hbar = hbar;
    const double twice_ell = epsilon - 0.5;
    if (std::isfinite(twice_ell) && twice_ell >= 0.0 && std::fmod(twice_ell, 2.0) == 0.0 && twice_ell < 2e9)
        p.ell = static_cast<int>(twice_ell / 2.0);
    p.validate();
    return p;
}

AlgebraParams AlgebraParams::from_ell(int ell, double length_scale, double hbar) {
    if (ell < 0) raise(ErrorKind::domain, "ell must be nonnegative");
    return from_epsilon(2.0 * ell + 0.5, length_scale, hbar);
}

void AlgebraParams::validate() const {
    if (!std::isfinite(epsilon) || epsilon < 0.5) raise(ErrorKind::domain, "epsilon must be finite and >= 1/2");
    if (nu != 2.0 * epsilon - 1.0) raise(ErrorKind::domain, "nu must equal 2 epsilon - 1");
    if (ell && 2.0 * *ell + 0.5 != epsilon) raise(ErrorKind::domain, "ell inconsistent with epsilon");
    if (!(length_scale > 0.0) || !std::isfinite(length_scale)) raise(ErrorKind::domain, "length scale must be positive");
    if (!(hbar > 0.0) || !std::isfinite(hbar)) raise(ErrorKind::domain, "hbar must be positive");
}

int quantized_ell(const AlgebraParams& params) {
    if (!params.ell) raise(ErrorKind::quantization, "coordinate representation needs epsilon = 2 ell + 1/2");
    return *params.ell;
}

double FockVector::tail_mass(std::size_t width) const {
    const std::size_t n = truncation();
    const std::size_t w = std::min(width, n);
    return amplitudes.tail(static_cast<Eigen::Index>(w)).squaredNorm();
}

FockVector FockVector::resized(std::size_t n) const {
    FockVector out;
    out.renormalized = renormalized;
    out.amplitudes = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(n));
    const auto m = static_cast<Eigen::Index>(std::min(n, truncation()));
    out.amplitudes.head(m) = amplitudes.head(m);
    return out;
}

cd inner(const FockVector& lhs, const FockVector& rhs) {
    const auto m = static_cast<Eigen::Index>(std::min(lhs.truncation(), rhs.truncation()));
    return lhs.amplitudes.head(m).dot(rhs.amplitudes.head(m));
}

double ladder_element(double epsilon, std::size_t k) {
    return (k % 2 == 0) ? std::sqrt(double(k)) : std::sqrt(double(k) - 1.0 + 2.0 * epsilon);
}

Ladder build_ladder(const AlgebraParams& params, std::size_t n) {
    params.validate();
    if (n < 2) raise(ErrorKind::configuration, "truncation must be at least 2");
    const auto size = static_cast<Eigen::Index>(n);
    Ladder l{OperatorMatrix::Zero(size, size), OperatorMatrix::Zero(size, size), OperatorMatrix::Zero(size, size)};
    for (Eigen::Index k = 1; k < size; ++k) {
        const double e = ladder_element(params.epsilon, static_cast<std::size_t>(k));
        l.a(k - 1, k) = e;
        l.a_dagger(k, k - 1) = e;
    }
    for (Eigen::Index k = 0; k < size; ++k) l.reflection(k, k) = (k % 2 == 0) ? 1.0 : -1.0;
    return l;
}

namespace {

// Pentadiagonal entries: diag[k] = H(k,k), up[k] = H(k,k+2), low[k] = H(k+2,k).
struct Entries {
    std::vector<cd> diag;
    std::vector<cd> up;
    std::vector<cd> low;
};

Entries hamiltonian_entries(const AlgebraParams& params, cd alpha, double beta, double delta, std::size_t n) {
    Entries e;
    e.diag.resize(n);
    e.up.resize(n >= 2 ? n - 2 : 0);
    e.low.resize(e.up.size());
    const double h = params.hbar;
    for (std::size_t k = 0; k < n; ++k) {
        const double below = k > 0 ? ladder_element(params.epsilon, k) : 0.0;
        const double above = k + 1 < n ? ladder_element(params.epsilon, k + 1) : 0.0;
        const double d = 0.5 * (below * below + above * above);
        e.diag[k] = cd(h * (beta * d + delta), 0.0);
    }
    for (std::size_t k = 0; k + 2 < n; ++k) {
        const double s2 = ladder_element(params.epsilon, k + 1) * ladder_element(params.epsilon, k + 2);
        e.up[k] = (0.5 * h) * std::conj(alpha) * s2;
        e.low[k] = (0.5 * h) * alpha * s2;
    }
    return e;
}

OperatorMatrix dense_from(const Entries& e) {
    const auto n = static_cast<Eigen::Index>(e.diag.size());
    OperatorMatrix m = OperatorMatrix::Zero(n, n);
    for (Eigen::Index k = 0; k < n; ++k) m(k, k) = e.diag[k];
    for (Eigen::Index k = 0; k + 2 < n; ++k) {
        m(k, k + 2) = e.up[k];
        m(k + 2, k) = e.low[k];
    }
    return m;
}

void apply_banded(const Entries& e, const Eigen::VectorXcd& psi, Eigen::VectorXcd& out) {
    const std::size_t n = e.diag.size();
    for (std::size_t k = 0; k < n; ++k) {
        cd s = k >= 2 ? e.low[k - 2] * psi[k - 2] + e.diag[k] * psi[k] : e.diag[k] * psi[k];
        if (k + 2 < n) s += e.up[k] * psi[k + 2];
        out[k] = s;
    }
}

void apply_dense(const OperatorMatrix& m, const Eigen::VectorXcd& psi, Eigen::VectorXcd& out) {
    const Eigen::Index n = m.rows();
    for (Eigen::Index k = 0; k < n; ++k) {
        cd s(0.0, 0.0);
        for (Eigen::Index j = 0; j < n; ++j) s += m(k, j) * psi[j];
        out[k] = s;
    }
}

class Propagator {
public:
    Propagator(const AlgebraParams& params, const CoefficientSchedule& schedule, std::size_t n, HamiltonianPath path)
        : params_(params), schedule_(schedule), n_(n), path_(path) {
        const auto size = static_cast<Eigen::Index>(n);
        k1_.resize(size);
        k2_.resize(size);
        k3_.resize(size);
        k4_.resize(size);
        tmp_.resize(size);
    }

    // dpsi/dt = -(i/hbar) H(t) psi
    void rhs(double t, const Eigen::VectorXcd& psi, Eigen::VectorXcd& out) {
        const ScheduleSample s = schedule_.at(t);
        const Entries e = hamiltonian_entries(params_, s.alpha, s.beta, s.delta, n_);
        if (path_ == HamiltonianPath::banded) apply_banded(e, psi, out);
        else apply_dense(dense_from(e), psi, out);
        out *= cd(0.0, -1.0 / params_.hbar);
    }

    void step(double t, double h, Eigen::VectorXcd& psi) {
        rhs(t, psi, k1_);
        tmp_ = psi + (0.5 * h) * k1_;
        rhs(t + 0.5 * h, tmp_, k2_);
        tmp_ = psi + (0.5 * h) * k2_;
        rhs(t + 0.5 * h, tmp_, k3_);
        tmp_ = psi + h * k3_;
        rhs(t + h, tmp_, k4_);
        psi += (h / 6.0) * (k1_ + 2.0 * k2_ + 2.0 * k3_ + k4_);
    }

private:
    const AlgebraParams& params_;
    const CoefficientSchedule& schedule_;
    std::size_t n_;
    HamiltonianPath path_;
    Eigen::VectorXcd k1_, k2_, k3_, k4_, tmp_;
};

std::vector<Eigen::VectorXcd> run(const Eigen::VectorXcd& psi0, const CoefficientSchedule& schedule,
                                  std::span<const double> times, double dt, const AlgebraParams& params,
                                  HamiltonianPath path, int refine) {
    Propagator prop(params, schedule, static_cast<std::size_t>(psi0.size()), path);
    std::vector<Eigen::VectorXcd> out;
    out.reserve(times.size());
    Eigen::VectorXcd psi = psi0;
    double t = 0.0;
    for (double target : times) {
        const double span = target - t;
        if (span > 0.0) {
            const long steps = std::max(1L, static_cast<long>(std::ceil(span / dt - 1e-9))) * refine;
            const double h = span / double(steps);
            for (long j = 0; j < steps; ++j) prop.step(t + double(j) * h, h, psi);
        }
        t = target;
        out.push_back(psi);
    }
    return out;
}

}  // namespace

OperatorMatrix build_hamiltonian(const AlgebraParams& params, cd alpha, double beta, double delta, std::size_t n) {
    params.validate();
    if (n < 2) raise(ErrorKind::configuration, "truncation must be at least 2");
    return dense_from(hamiltonian_entries(params, alpha, beta, delta, n));
}

Eigen::VectorXcd apply_hamiltonian(const AlgebraParams& params, cd alpha, double beta, double delta,
                                   const Eigen::VectorXcd& psi, HamiltonianPath path) {
    const auto n = static_cast<std::size_t>(psi.size());
    if (n < 2) raise(ErrorKind::configuration, "truncation must be at least 2");
    const Entries e = hamiltonian_entries(params, alpha, beta, delta, n);
    Eigen::VectorXcd out(psi.size());
    if (path == HamiltonianPath::banded) apply_banded(e, psi, out);
    else apply_dense(dense_from(e), psi, out);
    return out;
}

std::vector<FockVector> evolve_schrodinger_sampled(const FockVector& psi0, const CoefficientSchedule& schedule,
                                                   std::span<const double> times, double dt,
                                                   const AlgebraParams& params, const EvolveOptions& options) {
    params.validate();
    if (psi0.truncation() < 2) raise(ErrorKind::configuration, "truncation must be at least 2");
    if (!(dt > 0.0) || !std::isfinite(dt)) raise(ErrorKind::configuration, "dt must be positive");
    double prev = 0.0;
    for (double t : times) {
        if (!std::isfinite(t) || t < prev) raise(ErrorKind::configuration, "sample times must be finite, nonnegative and nondecreasing");
        prev = t;
    }
    if (std::abs(psi0.norm_squared() - 1.0) > options.norm_tolerance) raise(ErrorKind::norm_drift, "initial state is not normalized");
    if (psi0.tail_mass(options.tail_width) >= options.tail_tolerance)
        raise(ErrorKind::tail_mass, "initial state has mass at the truncation boundary");

    const auto coarse = run(psi0.amplitudes, schedule, times, dt, params, options.path, 1);
    const auto fine = run(psi0.amplitudes, schedule, times, dt, params, options.path, 2);

    std::vector<FockVector> out;
    out.reserve(times.size());
    for (std::size_t i = 0; i < fine.size(); ++i) {
        const double diff = (coarse[i] - fine[i]).cwiseAbs().maxCoeff();
        if (diff > options.halving_tolerance) raise(ErrorKind::step_halving, "halved-step rerun disagrees; reduce dt");
        FockVector v;
        v.amplitudes = fine[i];
        if (std::abs(v.norm_squared() - 1.0) > options.norm_tolerance) raise(ErrorKind::norm_drift, "norm drift exceeds tolerance; reduce dt");
        if (v.tail_mass(options.tail_width) >= options.tail_tolerance)
            raise(ErrorKind::tail_mass, "state leaks into the truncation boundary; raise the truncation");
        out.push_back(std::move(v));
    }
    return out;
}

FockVector evolve_schrodinger(const FockVector& psi0, const CoefficientSchedule& schedule, double t_final, double dt,
                              const AlgebraParams& params, const EvolveOptions& options) {
    const double times[] = {t_final};
    return evolve_schrodinger_sampled(psi0, schedule, times, dt, params, options)[0];
}

}  // namespace parabose
