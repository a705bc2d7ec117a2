#pragma once

#include <utility>
#include <vector>

#include "onsager/dyadic.hpp"
#include "onsager/field.hpp"

namespace onsager {

/// Time-sampled nonnegative scalar series f(t_i) on [t_0, t_N].
///
/// Measures of level sets treat the series as left-constant (f = f_i on
/// [t_i, t_{i+1})); integrals of powers of f use the trapezoid rule.
class NormSeries {
public:
    NormSeries(std::vector<double> times, std::vector<double> values);

    const std::vector<double>& times() const { return times_; }
    const std::vector<double>& values() const { return values_; }
    std::size_t size() const { return times_.size(); }
    double span() const { return times_.back() - times_.front(); }

    NormSeries scaled(double c) const;

private:
    std::vector<double> times_;
    std::vector<double> values_;
};

/// Space exponent pair of L^beta(0,T; B) or L^{beta,w}(0,T; B).
struct TimeSpaceSpec {
    double beta = 2.0;  ///< in (0, inf]
    bool weak = false;
    BesovSpec besov;
};

/// |{s : f(s) > t}|.
double distribution_function(const NormSeries& f, double t);

/// sup_{t>0} t |{f > t}|^{1/beta}. On a step function the supremum is
/// max_i f_i |{f >= f_i}|^{1/beta}; beta = infinity gives max f.
double weak_quasinorm(const NormSeries& f, double beta);

/// (int f^beta)^{1/beta} by trapezoid; max sample for beta = infinity.
/// For beta < 1 the same formula is returned (a quasinorm).
double time_norm(const NormSeries& f, double beta);

struct Interval {
    double lo;
    double hi;
};

struct ExceptionalSet {
    double threshold;
    std::vector<Interval> intervals;
    double measure;
};

/// Merged intervals where f >= threshold (inclusive).
ExceptionalSet superlevel_set(const NormSeries& f, double threshold);

/// E_q = {s : f(s) >= lambda_q^{2/beta}}.
ExceptionalSet exceptional_set(const NormSeries& f, int q, double beta);

struct Membership {
    NormSeries series;
    double value;
    /// The value is finite for the sampled trajectory. Finiteness of the
    /// continuum norm cannot be decided from finitely many samples.
    bool finite_at_resolution;
};

/// Builds t -> ||u(t)||_{B} and applies the weak or strong time norm.
Membership membership(const Trajectory& traj, const TimeSpaceSpec& spec);
/// Same, for a series already evaluated (spec.besov is not used).
Membership membership(NormSeries series, const TimeSpaceSpec& spec);

/// The series t -> besov_norm(u(t), spec) alone.
NormSeries besov_series(const Trajectory& traj, const BesovSpec& spec);

}  // namespace onsager
