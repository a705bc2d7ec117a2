#include "onsager/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "onsager/error.hpp"

namespace onsager {

namespace {
const Rational kOne(1);
const Rational kHalf(1, 2);
const Rational kThird(1, 3);

void require_exponents(const Rational& b, const Rational& ip) {
    require(b >= 0, "1/beta must be nonnegative");
    require(ip >= 0 && ip <= 1, "p must lie in [1, inf]");
}

Hypothesis hyp(std::string name, const Rational& slack, bool strict) {
    const bool ok = strict ? slack > 0 : slack >= 0;
    return {std::move(name), ok, to_double(slack)};
}

CriterionVerdict finish(std::string criterion, std::string gate, std::vector<Hypothesis> hyps,
                        const Trajectory& traj, double beta, double p, double s, bool weak) {
    CriterionVerdict v;
    v.criterion = std::move(criterion);
    v.gate = std::move(gate);
    v.hypotheses = std::move(hyps);
    v.hypotheses_satisfied = std::all_of(v.hypotheses.begin(), v.hypotheses.end(),
                                         [](const Hypothesis& h) { return h.satisfied; });
    v.margin = std::numeric_limits<double>::infinity();
    for (const auto& h : v.hypotheses) v.margin = std::min(v.margin, h.slack);
    v.besov_s = s;
    v.weak_in_time = weak;
    const Membership m = membership(traj, {beta, weak, BesovSpec{s, p, INFINITY}});
    v.norm_value = m.value;
    v.finite_at_resolution = m.finite_at_resolution;
    return v;
}
}  // namespace

Rational minimal_alpha(const Rational& b, const Rational& ip) {
    require_exponents(b, ip);
    if (b <= kThird) {
        if (ip <= b) return 2 * b + 2 * ip - 1;
        return b + 3 * ip - 1;
    }
    if (b + 2 * ip >= 1) return Rational(5, 2) * b + 3 * ip - Rational(3, 2);
    return 2 * b + 2 * ip - 1;
}

InterpolationResult minimal_alpha_via_interpolation(const Rational& b, const Rational& ip) {
    require_exponents(b, ip);
    require(b <= 1, "the interpolation derivation needs beta >= 1");
    const std::pair<const char*, Rational> bounds[] = {
        {"1/x >= 3 - 6/p", 3 - 6 * ip},
        {"1/x >= 3 - 6/beta", 3 - 6 * b},
        {"1/x >= 3/beta", 3 * b},
        {"x <= 1", kOne},
    };
    InterpolationResult r;
    r.inv_x = bounds[0].second;
    for (const auto& [name, v] : bounds) r.inv_x = std::max(r.inv_x, v);
    for (const auto& [name, v] : bounds)
        if (v == r.inv_x) r.active.emplace_back(name);
    r.alpha = 3 * ip + 2 * b - Rational(3, 2) + r.inv_x / 6;
    return r;
}

std::string to_string(Region r) {
    switch (r) {
        case Region::Classical1: return "classical-1";
        case Region::Classical2: return "classical-2";
        case Region::Classical3: return "classical-3";
        case Region::Theorem11Improved: return "theorem-1.1-improved";
        case Region::Theorem13Extended: return "theorem-1.3-extended";
        case Region::Outside: return "outside";
    }
    return "unknown";
}

RegionPoint classify_region(const Rational& b, const Rational& ip) {
    require(b >= 0 && ip >= 0, "inverse exponents must be nonnegative");
    RegionPoint pt{b, ip, Region::Outside, Rational(0)};
    if (ip > 1) return pt;
    pt.minimal_alpha = minimal_alpha(b, ip);
    if (b <= 1 && ip < b && b + 2 * ip < 1)
        pt.label = Region::Theorem11Improved;
    else if (b + 2 * ip <= 1 && ip <= b)
        pt.label = Region::Classical1;
    else if (b >= kThird && b <= 1 && b + 2 * ip >= 1)
        pt.label = Region::Classical2;
    else if (b <= kThird && ip >= b)
        pt.label = Region::Classical3;
    else
        pt.label = Region::Theorem13Extended;
    return pt;
}

std::vector<RegionPoint> region_grid(int grid, const Rational& bmax, const Rational& pmax) {
    require(grid >= 1, "region grid needs at least one cell");
    std::vector<RegionPoint> out;
    out.reserve(static_cast<std::size_t>(grid + 1) * (grid + 1));
    for (int i = 0; i <= grid; ++i)
        for (int j = 0; j <= grid; ++j)
            out.push_back(classify_region(bmax * Rational(i, grid), pmax * Rational(j, grid)));
    return out;
}

CriterionVerdict check_weak_onsager(const Trajectory& traj, const Rational& b, const Rational& ip,
                                    WeakGate gate) {
    require_exponents(b, ip);
    std::vector<Hypothesis> h;
    if (gate == WeakGate::Theorem) h.push_back(hyp("1 <= beta", kOne - b, false));
    h.push_back(hyp("beta < p", b - ip, true));
    h.push_back(hyp("2/p + 1/beta < 1", kOne - b - 2 * ip, true));
    if (gate == WeakGate::Proposition) require(b > 0, "beta must be finite for this gate");
    const Rational s = 2 * b + 2 * ip - 1;
    return finish("theorem-1.1", gate == WeakGate::Theorem ? "theorem" : "proposition",
                  std::move(h), traj, exponent_from_inverse(b), exponent_from_inverse(ip),
                  to_double(s), true);
}

CriterionVerdict check_type2(const Trajectory& traj, const Rational& b, const Rational& ip) {
    require_exponents(b, ip);
    std::vector<Hypothesis> h;
    h.push_back(hyp("1 <= p", kOne - ip, false));
    h.push_back(hyp("0 < beta", b, true));
    h.push_back(hyp("beta <= 3", b - kThird, false));
    h.push_back(hyp("2/p + 1/beta >= 1", b + 2 * ip - 1, false));
    const double beta = b > 0 ? exponent_from_inverse(b) : INFINITY;
    const Rational s = Rational(5, 2) * b + 3 * ip - Rational(3, 2);
    return finish("theorem-1.3", "theorem", std::move(h), traj, beta, exponent_from_inverse(ip),
                  to_double(s), false);
}

CriterionVerdict check_classical(int which, const Trajectory& traj, const Rational& b,
                                 const Rational& ip) {
    require_exponents(b, ip);
    std::vector<Hypothesis> h;
    Rational s;
    switch (which) {
        case 1:
            h.push_back(hyp("1/beta + 2/p <= 1", kOne - b - 2 * ip, false));
            h.push_back(hyp("p >= beta", b - ip, false));
            s = 2 * b + 2 * ip - 1;
            break;
        case 2:
            h.push_back(hyp("1/beta + 2/p >= 1", b + 2 * ip - 1, false));
            h.push_back(hyp("1 <= beta", kOne - b, false));
            h.push_back(hyp("beta <= 3", b - kThird, false));
            h.push_back(hyp("p >= 1", kOne - ip, false));
            s = Rational(5, 2) * b + 3 * ip - Rational(3, 2);
            break;
        case 3:
            h.push_back(hyp("beta >= 3", kThird - b, false));
            h.push_back(hyp("1 <= p", kOne - ip, false));
            h.push_back(hyp("p <= beta", ip - b, false));
            s = b + 3 * ip - 1;
            break;
        default:
            throw PreconditionError("classical criterion must be 1, 2 or 3");
    }
    return finish("classical-" + std::to_string(which), "lemma", std::move(h), traj,
                  exponent_from_inverse(b), exponent_from_inverse(ip), to_double(s), false);
}

CriterionVerdict check_type1(const Trajectory& traj, const Rational& ip) {
    require_exponents(ip, ip);
    std::vector<Hypothesis> h;
    h.push_back(hyp("p > 4", Rational(1, 4) - ip, true));
    // beta = 2p/(p-2); p <= 2 falls back to beta = 2.
    const Rational b = ip < kHalf ? kHalf - ip : kHalf;
    return finish("type-1", "corollary", std::move(h), traj, exponent_from_inverse(b),
                  exponent_from_inverse(ip), 0.0, true);
}

std::vector<CriterionVerdict> classify(const Trajectory& traj, const Rational& b,
                                       const Rational& ip) {
    std::vector<CriterionVerdict> out;
    out.push_back(check_weak_onsager(traj, b, ip));
    if (b > 0) out.push_back(check_type2(traj, b, ip));
    for (int c = 1; c <= 3; ++c) out.push_back(check_classical(c, traj, b, ip));
    out.push_back(check_type1(traj, ip));
    return out;
}

Type1Derivation type1_derive(const Rational& ip) {
    require(ip >= 0 && ip < Rational(1, 4), "type-I derivation needs p > 4");
    Type1Derivation d;
    d.inv_beta = kHalf - ip;
    d.alpha = 2 * d.inv_beta + 2 * ip - 1;
    d.theta = kHalf - ip;
    d.inside_theorem_11 = d.inv_beta <= 1 && ip < d.inv_beta && d.inv_beta + 2 * ip < 1;
    return d;
}

Type1Fit check_type1_rate(const NormSeries& series, double T, double p, double threshold) {
    require(p > 4.0, "type-I rate check needs p > 4");
    const double theta = 0.5 - (std::isinf(p) ? 0.0 : 1.0 / p);
    double c = 0.0;
    for (std::size_t i = 0; i < series.size(); ++i) {
        const double t = series.times()[i];
        require(t < T, "sample times must precede the blowup time");
        c = std::max(c, series.values()[i] * std::pow(T - t, theta));
    }
    return {c, c <= threshold};
}

RateComparison rates_compare(const Rational& ip) {
    require(ip >= 0 && ip < kThird, "rate comparison needs p > 3");
    RateComparison r;
    r.type1 = kHalf - ip;
    r.critical = kHalf - Rational(3, 2) * ip;
    r.type1_larger = r.type1 > r.critical;
    return r;
}

}  // namespace onsager
