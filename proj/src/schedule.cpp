#include "parabose/schedule.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "parabose/error.hpp"

namespace parabose {

namespace {

double parse_field(const std::string& text, const std::string& where) {
    double value = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    while (first < last && (*first == ' ' || *first == '\t')) ++first;
    while (last > first && (last[-1] == ' ' || last[-1] == '\t' || last[-1] == '\r')) --last;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || !std::isfinite(value)) raise(ErrorKind::schedule, where + ": bad number '" + text + "'");
    return value;
}

}  // namespace

CoefficientSchedule CoefficientSchedule::constant(cd alpha, double beta, double delta) {
    CoefficientSchedule s;
    s.family_ = ScheduleFamily::constant;
    s.terms_.alpha0 = alpha;
    s.terms_.beta0 = beta;
    s.terms_.delta0 = delta;
    s.at(0.0);
    return s;
}

CoefficientSchedule CoefficientSchedule::sinusoidal(const SinusoidalTerms& terms) {
    if (!std::isfinite(terms.omega)) raise(ErrorKind::schedule, "sinusoidal schedule: omega must be finite");
    CoefficientSchedule s;
    s.family_ = ScheduleFamily::sinusoidal;
    s.terms_ = terms;
    s.at(0.0);
    return s;
}

CoefficientSchedule CoefficientSchedule::tabulated(std::vector<double> times, std::vector<ScheduleSample> samples) {
    if (times.size() < 2 || times.size() != samples.size()) raise(ErrorKind::schedule, "tabulated schedule: need at least two samples");
    for (std::size_t k = 1; k < times.size(); ++k)
        if (!(times[k] > times[k - 1])) raise(ErrorKind::schedule, "tabulated schedule: t must be strictly increasing");
    CoefficientSchedule s;
    s.family_ = ScheduleFamily::tabulated;
    s.times_ = std::move(times);
    s.samples_ = std::move(samples);
    for (double t : s.times_) s.at(t);
    return s;
}

CoefficientSchedule CoefficientSchedule::from_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) raise(ErrorKind::io, "cannot open schedule table '" + path + "'");
    std::string line;
    int lineno = 0;
    bool header = false;
    std::vector<double> times;
    std::vector<ScheduleSample> samples;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (!header) {
            if (line != "t,alpha_re,alpha_im,beta,delta")
                raise(ErrorKind::schedule, path + ":" + std::to_string(lineno) + ": expected header t,alpha_re,alpha_im,beta,delta");
            header = true;
            continue;
        }
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ',')) fields.push_back(field);
        const std::string where = path + ":" + std::to_string(lineno);
        if (fields.size() != 5) raise(ErrorKind::schedule, where + ": expected 5 fields");
        times.push_back(parse_field(fields[0], where));
        samples.push_back({cd(parse_field(fields[1], where), parse_field(fields[2], where)),
                           parse_field(fields[3], where), parse_field(fields[4], where)});
    }
    if (!header) raise(ErrorKind::schedule, path + ": empty schedule table");
    return tabulated(std::move(times), std::move(samples));
}

ScheduleSample CoefficientSchedule::at(double t) const {
    ScheduleSample s;
    switch (family_) {
    case ScheduleFamily::constant:
        s = {terms_.alpha0, terms_.beta0, terms_.delta0};
        break;
    case ScheduleFamily::sinusoidal: {
        const double w = std::sin(terms_.omega * t + terms_.phase);
        s = {terms_.alpha0 + terms_.alpha1 * w, terms_.beta0 + terms_.beta1 * w, terms_.delta0 + terms_.delta1 * w};
        break;
    }
    case ScheduleFamily::tabulated: {
        if (t < times_.front() || t > times_.back()) raise(ErrorKind::schedule, "tabulated schedule: t outside the table range");
        auto it = std::upper_bound(times_.begin(), times_.end(), t);
        std::size_t hi = std::min<std::size_t>(it - times_.begin(), times_.size() - 1);
        const std::size_t lo = hi - 1;
        const double u = (t - times_[lo]) / (times_[hi] - times_[lo]);
        const ScheduleSample& a = samples_[lo];
        const ScheduleSample& b = samples_[hi];
        s = {a.alpha + u * (b.alpha - a.alpha), a.beta + u * (b.beta - a.beta), a.delta + u * (b.delta - a.delta)};
        break;
    }
    }
    if (!(s.beta > std::abs(s.alpha))) raise(ErrorKind::schedule, "schedule violates beta > |alpha|");
    if (!std::isfinite(s.delta)) raise(ErrorKind::schedule, "schedule: delta must be finite");
    return s;
}

}  // namespace parabose
