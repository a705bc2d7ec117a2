#pragma once

#include <string>
#include <vector>

#include "onsager/field.hpp"
#include "onsager/norms_time.hpp"
#include "onsager/rational.hpp"

namespace onsager {

// Exponents are passed as reciprocals: inv_beta = 1/beta, inv_p = 1/p, with
// 0 standing for an infinite exponent.

/// Smallest Besov regularity alpha for which L^beta B^alpha_{p,inf} gives the
/// energy equality, piecewise in (beta, p). Requires beta > 0 and p >= 1.
Rational minimal_alpha(const Rational& inv_beta, const Rational& inv_p);

struct InterpolationResult {
    Rational alpha;
    Rational inv_x;                   ///< optimal 1/x
    std::vector<std::string> active;  ///< constraints attaining 1/x
};

/// alpha = 3/p + 2/beta - 3/2 + 1/(6x) minimized over
/// 1/x >= max(3 - 6/p, 3 - 6/beta, 3/beta, 1). Defined for beta >= 1 only.
InterpolationResult minimal_alpha_via_interpolation(const Rational& inv_beta,
                                                    const Rational& inv_p);

enum class Region {
    Classical1,
    Classical2,
    Classical3,
    Theorem11Improved,
    Theorem13Extended,
    Outside,
};

std::string to_string(Region r);

struct RegionPoint {
    Rational inv_beta;
    Rational inv_p;
    Region label;
    Rational minimal_alpha;  ///< meaningful unless label is Outside
};

RegionPoint classify_region(const Rational& inv_beta, const Rational& inv_p);

/// Points (i/grid * inv_beta_max, j/grid * inv_p_max), i, j = 0..grid.
std::vector<RegionPoint> region_grid(int grid, const Rational& inv_beta_max = Rational(2),
                                     const Rational& inv_p_max = Rational(3, 2));

struct Hypothesis {
    std::string name;
    bool satisfied;
    double slack;  ///< signed distance to the boundary of this hypothesis
};

struct CriterionVerdict {
    std::string criterion;  ///< theorem-1.1, theorem-1.3, classical-1/2/3, type-1
    std::string gate;       ///< which hypothesis set was applied
    std::vector<Hypothesis> hypotheses;
    bool hypotheses_satisfied = false;
    double besov_s = 0.0;
    bool weak_in_time = false;
    double norm_value = 0.0;
    bool finite_at_resolution = false;
    double margin = 0.0;  ///< smallest hypothesis slack
    /// Hypotheses hold and the sampled norm is finite.
    bool satisfied() const { return hypotheses_satisfied && finite_at_resolution; }
};

enum class WeakGate {
    Theorem,      ///< 1 <= beta < p <= inf
    Proposition,  ///< p > beta > 0
};

CriterionVerdict check_weak_onsager(const Trajectory& traj, const Rational& inv_beta,
                                    const Rational& inv_p, WeakGate gate = WeakGate::Theorem);
CriterionVerdict check_type2(const Trajectory& traj, const Rational& inv_beta,
                             const Rational& inv_p);
CriterionVerdict check_classical(int which, const Trajectory& traj, const Rational& inv_beta,
                                 const Rational& inv_p);
/// Type-I bound in B^0_{p,inf}, tested through the weak-in-time space it
/// implies, L^{beta,w} with beta = 2p/(p-2).
CriterionVerdict check_type1(const Trajectory& traj, const Rational& inv_p);

/// Every criterion above at the same (beta, p).
std::vector<CriterionVerdict> classify(const Trajectory& traj, const Rational& inv_beta,
                                       const Rational& inv_p);

struct Type1Derivation {
    Rational inv_beta;  ///< 1/2 - 1/p
    Rational alpha;     ///< 2/beta + 2/p - 1, always 0
    Rational theta;     ///< rate exponent 1/2 - 1/p
    bool inside_theorem_11;
};

/// Requires p > 4.
Type1Derivation type1_derive(const Rational& inv_p);

struct Type1Fit {
    double constant;  ///< sup_i f_i (T - t_i)^{1/2 - 1/p}
    bool within;      ///< constant <= threshold
};

Type1Fit check_type1_rate(const NormSeries& series, double T, double p, double threshold);

struct RateComparison {
    Rational type1;     ///< 1/2 - 1/p
    Rational critical;  ///< 1/2 - 3/(2p)
    bool type1_larger;
};

/// Requires p > 3.
RateComparison rates_compare(const Rational& inv_p);

}  // namespace onsager
