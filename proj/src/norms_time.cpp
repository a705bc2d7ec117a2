#include "onsager/norms_time.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "onsager/error.hpp"

namespace onsager {

NormSeries::NormSeries(std::vector<double> times, std::vector<double> values)
    : times_(std::move(times)), values_(std::move(values)) {
    require(times_.size() == values_.size(), "series times and values differ in length");
    require(times_.size() >= 2, "series needs at least 2 samples");
    for (std::size_t i = 0; i < times_.size(); ++i) {
        require(values_[i] >= 0.0, "series values must be nonnegative");
        if (i > 0) require(times_[i] > times_[i - 1], "series times must be strictly increasing");
    }
}

NormSeries NormSeries::scaled(double c) const {
    std::vector<double> v = values_;
    for (double& x : v) x *= c;
    return NormSeries(times_, std::move(v));
}

double distribution_function(const NormSeries& f, double t) {
    const auto& ts = f.times();
    const auto& vs = f.values();
    double measure = 0.0;
    for (std::size_t i = 0; i + 1 < ts.size(); ++i)
        if (vs[i] > t) measure += ts[i + 1] - ts[i];
    return measure;
}

double weak_quasinorm(const NormSeries& f, double beta) {
    require(beta > 0.0, "weak quasinorm needs beta > 0");
    const auto& ts = f.times();
    const auto& vs = f.values();
    const std::size_t cells = ts.size() - 1;
    if (std::isinf(beta)) return *std::max_element(vs.begin(), vs.begin() + cells);

    // Sort cells by value descending; |{f >= v}| accumulates along the order.
    std::vector<std::size_t> order(cells);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return vs[a] > vs[b]; });
    double best = 0.0;
    double measure = 0.0;
    for (std::size_t k = 0; k < cells;) {
        const double v = vs[order[k]];
        while (k < cells && vs[order[k]] == v) {
            measure += ts[order[k] + 1] - ts[order[k]];
            ++k;
        }
        if (v > 0.0) best = std::max(best, v * std::pow(measure, 1.0 / beta));
    }
    return best;
}

double time_norm(const NormSeries& f, double beta) {
    require(beta > 0.0, "time norm needs beta > 0");
    const auto& ts = f.times();
    const auto& vs = f.values();
    if (std::isinf(beta)) return *std::max_element(vs.begin(), vs.end());
    const double peak = *std::max_element(vs.begin(), vs.end());
    if (peak == 0.0) return 0.0;
    double integral = 0.0;
    for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
        const double a = std::pow(vs[i] / peak, beta);
        const double b = std::pow(vs[i + 1] / peak, beta);
        integral += 0.5 * (ts[i + 1] - ts[i]) * (a + b);
    }
    return peak * std::pow(integral, 1.0 / beta);
}

ExceptionalSet superlevel_set(const NormSeries& f, double threshold) {
    const auto& ts = f.times();
    const auto& vs = f.values();
    ExceptionalSet out{threshold, {}, 0.0};
    for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
        if (vs[i] < threshold) continue;
        if (!out.intervals.empty() && out.intervals.back().hi == ts[i]) {
            out.intervals.back().hi = ts[i + 1];
        } else {
            out.intervals.push_back({ts[i], ts[i + 1]});
        }
        out.measure += ts[i + 1] - ts[i];
    }
    return out;
}

ExceptionalSet exceptional_set(const NormSeries& f, int q, double beta) {
    require(q >= 0, "exceptional set needs q >= 0");
    require(beta > 0.0, "exceptional set needs beta > 0");
    return superlevel_set(f, std::pow(lambda(q), 2.0 / beta));
}

NormSeries besov_series(const Trajectory& traj, const BesovSpec& spec) {
    std::vector<double> ts, vs;
    for (std::size_t i = 0; i < traj.size(); ++i) {
        ts.push_back(traj.time(i));
        vs.push_back(besov_norm(traj.snapshots()[i], spec));
    }
    return NormSeries(std::move(ts), std::move(vs));
}

Membership membership(const Trajectory& traj, const TimeSpaceSpec& spec) {
    return membership(besov_series(traj, spec.besov), spec);
}

Membership membership(NormSeries series, const TimeSpaceSpec& spec) {
    require(spec.beta > 0.0, "time exponent beta must be positive");
    const double value =
        spec.weak ? weak_quasinorm(series, spec.beta) : time_norm(series, spec.beta);
    return {std::move(series), value, std::isfinite(value)};
}

}  // namespace onsager
