#include <cmath>
#include <numbers>
#include <random>

#include "parabose/dynamics.hpp"
#include "parabose/specfun.hpp"
#include "parabose/states.hpp"
#include "support.hpp"

using namespace parabose;
using testing::cd;
using testing::kind_of;
using testing::rel_err;

namespace {

double phase_free_distance(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
    const cd ov = a.dot(b);
    const cd ph = ov / std::abs(ov);
    return (a * ph - b).cwiseAbs().maxCoeff();
}

Eigen::VectorXcd lowered(const FockVector& v, double eps, cd zeta, cd xi) {
    const auto n = v.truncation();
    const auto a = assemble_A(1.0, zeta, 0.0, AlgebraParams::from_epsilon(eps), n);
    return (a * v.amplitudes - xi * v.amplitudes).head(static_cast<Eigen::Index>(n - 2));
}

}  // namespace

TEST_CASE("svs transition values") {
    CHECK(rel_err(svs_transition(0.3, 0.5, 0), 0.95393920141694564915) <= 1e-13);
    CHECK(rel_err(svs_transition(cd(0.0, 0.3), 0.5, 1), 0.042927264063762554212) <= 1e-13);
    CHECK(rel_err(svs_transition(std::polar(0.3, 2.0), 2.5, 3), 0.0037792039124008882946) <= 1e-13);
    for (double eps : {0.5, 1.5, 4.0}) {
        CHECK(svs_transition(0.0, eps, 0) == 1.0);
        CHECK(svs_transition(0.0, eps, 3) == 0.0);
    }
}

TEST_CASE("svs dispersion grows with epsilon") {
    auto last_visible = [](double eps) {
        std::size_t last = 0;
        for (std::size_t n = 0; n < 200; ++n)
            if (svs_transition(0.3, eps, n) > 1e-3) last = n;
        return last;
    };
    std::size_t prev = 0;
    for (double eps : {0.5, 2.5, 4.5, 6.5}) {
        const auto d = last_visible(eps);
        CHECK(d > prev);
        prev = d;
    }
}

TEST_CASE("svs amplitudes") {
    SUBCASE("vacuum") {
        const auto v = svs_amplitudes(SvsSpec{0.0, 1.5, 0.7});
        CHECK(std::abs(v.amplitudes[0] - std::polar(1.0, 0.7)) <= 1e-15);
        CHECK(v.amplitudes.tail(v.truncation() - 1).cwiseAbs().maxCoeff() == 0.0);
    }
    SUBCASE("canonical squeezed vacuum") {
        const double r = 0.8, th = 1.1;
        const cd zeta = std::polar(std::tanh(r), th);
        const auto v = svs_amplitudes(SvsSpec{zeta, 0.5, 0.0});
        double worst = 0.0;
        for (std::size_t n = 0; 2 * n < v.truncation(); ++n) {
            const double mag = std::exp(0.5 * std::lgamma(2.0 * n + 1) - n * std::log(2.0) - std::lgamma(n + 1.0));
            const cd want = mag * std::pow(-std::polar(std::tanh(r), th), double(n)) / std::sqrt(std::cosh(r));
            worst = std::max(worst, std::abs(v.amplitudes[Eigen::Index(2 * n)] - want));
            CHECK(v.amplitudes[Eigen::Index(2 * n + 1)] == cd(0.0));
        }
        CHECK(worst <= 1e-12);
    }
    SUBCASE("binomial normalization") {
        const auto v = svs_amplitudes(SvsSpec{0.3, 2.5, 0.0});
        CHECK(std::abs(v.norm_squared() - 1.0) <= 1e-12);
        CHECK_FALSE(v.renormalized);
        for (std::size_t n = 0; n < 10; ++n)
            CHECK(std::abs(std::norm(svs_coefficient(SvsSpec{0.3, 2.5, 0.0}, n)) - svs_transition(0.3, 2.5, n)) <= 1e-14);
    }
    SUBCASE("annihilated by the Bogoliubov operator") {
        const cd zeta(0.35, -0.4);
        const auto v = svs_amplitudes(SvsSpec{zeta, 1.7, 0.2}, 200);
        CHECK(lowered(v, 1.7, zeta, 0.0).norm() <= 1e-8);
    }
    SUBCASE("truncation rules") {
        const SvsSpec s{0.6, 2.5, 0.0};
        const auto need = svs_required_truncation(s);
        CHECK(need % 2 == 0);
        CHECK(kind_of([&] { svs_amplitudes(s, need - 2); }) == ErrorKind::truncation);
        CHECK(kind_of([&] { svs_amplitudes(s, need + 1); }) == ErrorKind::configuration);
        CHECK(svs_amplitudes(s, need + 10).truncation() == need + 10);
        CHECK(kind_of([] { svs_amplitudes(SvsSpec{1.0, 2.5, 0.0}); }) == ErrorKind::domain);
        CHECK(kind_of([] { svs_amplitudes(SvsSpec{0.1, 0.4, 0.0}); }) == ErrorKind::domain);
    }
}

TEST_CASE("svs overlaps") {
    const SvsSpec a{cd(0.3, 0.2), 2.5, 0.4};
    const SvsSpec b{cd(-0.1, 0.5), 2.5, -0.3};
    CHECK(std::abs(svs_overlap(a, a) - 1.0) <= 1e-14);
    const SvsSpec zero{0.0, 2.5, 0.0};
    const SvsSpec z{cd(0.3, 0.2), 2.5, 0.0};
    CHECK(std::abs(svs_overlap(zero, z) - std::pow(1.0 - std::norm(z.zeta), 1.25)) <= 1e-14);
    const auto va = svs_amplitudes(a, 120);
    const auto vb = svs_amplitudes(b, 120);
    CHECK(std::abs(svs_overlap(a, b) - inner(va, vb)) <= 1e-10);
    CHECK(std::abs(svs_overlap(a, b)) <= 1.0);
    CHECK(std::abs(svs_overlap(a.zeta, b.zeta, 2.5, 0.6) / svs_overlap(SvsSpec{a.zeta, 2.5, 0.0}, SvsSpec{b.zeta, 2.5, 0.0}) -
                   std::polar(1.0, 2.5 * 0.6)) <= 1e-14);
    CHECK(kind_of([&] { svs_overlap(a, SvsSpec{b.zeta, 1.5, 0.0}); }) == ErrorKind::domain);
}

TEST_CASE("cs transitions match frozen values") {
    struct Case {
        cd zeta, xi;
        double eps;
        double p[6];
        double mean_r;
    };
    const Case cases[] = {
        {0.45, cd(0.0, 1.0), 2.5,
         {0.22332772980628086832, 0.044665545961256173663, 0.23588991460788416716, 0.054946597522695317923,
          0.16510312487449257847, 0.042339242582963467465},
         0.61257843784734871225},
        {cd(0.2, -0.35), cd(1.3, 0.6), 1.5,
         {0.14568014066660310479, 0.099548096122178788273, 0.17833677219936663411, 0.11014996835919082922,
          0.13753886670550860136, 0.079840577309316789662},
         0.24491439998025245134},
        {cd(-0.6, 0.1), cd(-2.0, 0.5), 0.75,
         {0.000033512659579805411462, 0.000094952535476115332477, 0.00029317991689066434128,
          0.00053912693178545769847, 0.0011167308052791076861, 0.0016943513707248736},
         0.020165990387787712046},
    };
    for (const auto& c : cases) {
        CAPTURE(c.eps);
        const auto v = cs_amplitudes(CsSpec{c.zeta, c.xi, c.eps, 0.3});
        for (std::size_t n = 0; n < 6; ++n) {
            CAPTURE(n);
            CHECK(rel_err(cs_transition(c.zeta, c.xi, c.eps, n), c.p[n]) <= 1e-10);
            CHECK(rel_err(std::norm(v.amplitudes[Eigen::Index(n)]), c.p[n]) <= 1e-10);
        }
        CHECK(std::abs(mean_reflection(c.zeta, c.xi, c.eps) - c.mean_r) <= 1e-12);
    }
}

TEST_CASE("cs amplitudes") {
    SUBCASE("zeta = 0 gives the para-Bose coherent state") {
        const cd xi(1.2, -0.7);
        const double eps = 1.5;
        const auto v = cs_amplitudes(CsSpec{0.0, xi, eps, 0.0});
        Eigen::VectorXcd want(v.amplitudes.size());
        const cd h = 0.5 * xi * xi;
        for (Eigen::Index k = 0; k < want.size(); ++k) {
            const double n = double(k / 2);
            const double lg = std::lgamma(n + 1.0);
            if (k % 2 == 0) want[k] = std::pow(h, n) * std::exp(-0.5 * (lg + std::lgamma(n + eps)));
            else want[k] = xi * std::pow(h, n) * std::exp(-0.5 * (lg + std::lgamma(n + eps + 1.0))) / std::sqrt(2.0);
        }
        want.normalize();
        CHECK(phase_free_distance(v.amplitudes, want) <= 1e-12);
    }
    SUBCASE("canonical coherent state") {
        const cd xi(0.9, 1.4);
        const auto v = cs_amplitudes(CsSpec{0.0, xi, 0.5, 0.0});
        Eigen::VectorXcd want(v.amplitudes.size());
        for (Eigen::Index k = 0; k < want.size(); ++k)
            want[k] = std::exp(-0.5 * std::norm(xi) - 0.5 * std::lgamma(k + 1.0)) * std::pow(xi, double(k));
        CHECK(phase_free_distance(v.amplitudes, want) <= 1e-12);
    }
    SUBCASE("xi = 0 gives the squeezed vacuum") {
        const cd zeta(0.3, 0.4);
        const auto v = cs_amplitudes(CsSpec{zeta, 0.0, 2.5, 0.0});
        const auto s = svs_amplitudes(SvsSpec{zeta, 2.5, 0.0}, v.truncation());
        for (Eigen::Index k = 1; k < v.amplitudes.size(); k += 2) CHECK(v.amplitudes[k] == cd(0.0));
        CHECK(phase_free_distance(v.amplitudes, s.amplitudes) <= 1e-9);
        CHECK(cs_transition(zeta, 0.0, 2.5, 3) == 0.0);
    }
    SUBCASE("eigenrelation") {
        const cd zeta = 0.45, xi(0.0, 1.0);
        const auto v = cs_amplitudes(CsSpec{zeta, xi, 2.5, 0.0}, 160);
        CHECK(lowered(v, 2.5, zeta, xi).norm() <= 1e-8);
        const cd z2(-0.2, 0.55), x2(1.5, -2.0);
        const auto w = cs_amplitudes(CsSpec{z2, x2, 0.9, 0.0}, 200);
        CHECK(lowered(w, 0.9, z2, x2).norm() <= 1e-8);
    }
    SUBCASE("continuity across the small-zeta switch") {
        const cd xi(1.1, 0.4);
        for (double th : {0.0, 1.3, -2.5}) {
            const cd lo = std::polar(1e-4 * (1.0 - 1e-9), th);
            const cd hi = std::polar(1e-4 * (1.0 + 1e-9), th);
            for (std::size_t n = 0; n < 12; ++n)
                CHECK(std::abs(cs_transition(lo, xi, 1.5, n) - cs_transition(hi, xi, 1.5, n)) <= 1e-7);
            const auto a = cs_amplitudes(CsSpec{lo, xi, 1.5, 0.0});
            const auto b = cs_amplitudes(CsSpec{hi, xi, 1.5, 0.0}, a.truncation());
            CHECK((a.amplitudes - b.amplitudes).cwiseAbs().maxCoeff() <= 1e-7);
        }
    }
    SUBCASE("errors") {
        CHECK(kind_of([] { cs_amplitudes(CsSpec{0.2, 51.0, 1.5, 0.0}); }) == ErrorKind::domain);
        CHECK(kind_of([] { cs_amplitudes(CsSpec{cd(0.0, 1.0), 1.0, 1.5, 0.0}); }) == ErrorKind::domain);
        const CsSpec s{0.3, 2.0, 1.5, 0.0};
        CHECK(kind_of([&] { cs_amplitudes(s, cs_required_truncation(s) - 2); }) == ErrorKind::truncation);
    }
}

TEST_CASE("random normalization grid") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double worst_svs = 0.0, worst_cs = 0.0, worst_sum = 0.0, worst_pn = 0.0;
    for (int k = 0; k < 100; ++k) {
        const cd zeta = std::polar(0.85 * u(rng), 2.0 * std::numbers::pi * u(rng));
        const cd xi = std::polar(4.0 * u(rng), 2.0 * std::numbers::pi * u(rng));
        const double eps = 0.5 + 5.0 * u(rng);
        const auto s = svs_amplitudes(SvsSpec{zeta, eps, u(rng)});
        const auto c = cs_amplitudes(CsSpec{zeta, xi, eps, u(rng)});
        worst_svs = std::max(worst_svs, std::abs(s.norm_squared() - 1.0));
        worst_cs = std::max(worst_cs, std::abs(c.norm_squared() - 1.0));
        CHECK_FALSE(c.renormalized);
        double total = 0.0;
        for (std::size_t n = 0; n < c.truncation(); ++n) {
            const double p = cs_transition(zeta, xi, eps, n);
            total += p;
            worst_pn = std::max(worst_pn, std::abs(p - std::norm(c.amplitudes[Eigen::Index(n)])));
        }
        double svs_total = 0.0;
        for (std::size_t n = 0; 2 * n < s.truncation(); ++n) svs_total += svs_transition(zeta, eps, n);
        worst_sum = std::max({worst_sum, std::abs(total - 1.0), std::abs(svs_total - 1.0)});
    }
    CHECK(worst_svs <= 1e-9);
    CHECK(worst_cs <= 1e-9);
    CHECK(worst_sum <= 1e-9);
    CHECK(worst_pn <= 1e-10);
}

TEST_CASE("cs overlaps") {
    const CsSpec a{cd(0.3, 0.1), cd(1.0, 0.5), 1.5, 0.2};
    const CsSpec b{cd(-0.2, 0.3), cd(0.4, -1.2), 1.5, -0.4};
    CHECK(std::abs(cs_overlap(a, a) - 1.0) <= 1e-12);
    const auto va = cs_amplitudes(a, 160);
    const auto vb = cs_amplitudes(b, 160);
    CHECK(std::abs(cs_overlap(a, b) - inner(va, vb)) <= 1e-9);
    CHECK(std::abs(cs_overlap(a, b)) <= 1.0);
    const CsSpec e1{cd(0.3, 0.1), 0.0, 1.5, 0.0};
    const CsSpec e2{cd(-0.2, 0.3), 0.0, 1.5, 0.0};
    CHECK(std::abs(std::abs(cs_overlap(e1, e2)) - std::abs(svs_overlap(SvsSpec{e1.zeta, 1.5, 0.0}, SvsSpec{e2.zeta, 1.5, 0.0}))) <=
          1e-10);
    CHECK(kind_of([&] { cs_overlap(a, CsSpec{b.zeta, b.xi, 2.5, 0.0}); }) == ErrorKind::domain);
}

TEST_CASE("mean reflection") {
    CHECK(mean_reflection(0.4, 0.0, 2.5) == 1.0);
    CHECK(std::abs(mean_reflection(0.0, 1.0, 0.5) - 0.1353352832366127) <= 1e-14);
    for (double y : {0.1, 2.0, 7.5}) CHECK(std::abs(mean_reflection(0.0, std::sqrt(y), 0.5) - std::exp(-2.0 * y)) <= 1e-13);
    const CsSpec s{cd(0.2, -0.5), cd(1.4, 0.3), 3.0, 0.0};
    const auto v = cs_amplitudes(s);
    double parity = 0.0;
    for (Eigen::Index k = 0; k < v.amplitudes.size(); ++k) parity += (k % 2 == 0 ? 1.0 : -1.0) * std::norm(v.amplitudes[k]);
    CHECK(std::abs(parity - mean_reflection(s.zeta, s.xi, s.epsilon)) <= 1e-10);
}
