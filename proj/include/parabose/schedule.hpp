#pragma once

#include <complex>
#include <string>
#include <vector>

namespace parabose {

using cd = std::complex<double>;

enum class ScheduleFamily { constant, sinusoidal, tabulated };

struct ScheduleSample {
    cd alpha;
    double beta = 1.0;
    double delta = 0.0;
};

// c0 + c1 sin(omega t + phase) for each coefficient.
struct SinusoidalTerms {
    cd alpha0;
    cd alpha1;
    double beta0 = 1.0;
    double beta1 = 0.0;
    double delta0 = 0.0;
    double delta1 = 0.0;
    double omega = 1.0;
    double phase = 0.0;
};

class CoefficientSchedule {
public:
    static CoefficientSchedule constant(cd alpha, double beta, double delta);
    static CoefficientSchedule sinusoidal(const SinusoidalTerms& terms);
    static CoefficientSchedule tabulated(std::vector<double> times, std::vector<ScheduleSample> samples);
    // Header t,alpha_re,alpha_im,beta,delta.
    static CoefficientSchedule from_csv(const std::string& path);

    ScheduleFamily family() const { return family_; }

    // Throws a schedule error unless beta > |alpha| at t.
    ScheduleSample at(double t) const;

private:
    ScheduleFamily family_ = ScheduleFamily::constant;
    SinusoidalTerms terms_;
    std::vector<double> times_;
    std::vector<ScheduleSample> samples_;
};

}  // namespace parabose
