#include "onsager/heuristics.hpp"

#include <algorithm>
#include <cmath>

#include "onsager/dyadic.hpp"
#include "onsager/error.hpp"
#include "onsager/spectral.hpp"

namespace onsager {

double f_exponent(double alpha, double p, double d) {
    require(d >= 0.0 && d <= 3.0, "intermittency dimension must lie in [0, 3]");
    require(p >= 1.0, "p must be >= 1");
    const double inv_p = std::isinf(p) ? 0.0 : 1.0 / p;
    return (2.0 * alpha + (1.0 - 2.0 * inv_p) * (3.0 - d)) / (d - 5.0);
}

std::string to_string(WorstDimension w) {
    return w == WorstDimension::Zero ? "0" : "one-minus";
}

WorstCase worst_d(const Rational& alpha, const Rational& ip) {
    const Rational split = 1 - 2 * ip;
    if (alpha > split) return {WorstDimension::Zero, -(2 * alpha + 3 * split) / 5};
    return {WorstDimension::OneMinus, -(2 * alpha + 2 * split) / 4};
}

Rational optimal_inv_beta(const Rational& alpha, const Rational& ip) {
    require(ip >= 0 && ip <= 1, "p must lie in [1, inf]");
    if (alpha <= 1 - 2 * ip) return alpha / 2 + Rational(1, 2) - ip;
    return Rational(2, 5) * alpha + Rational(3, 5) - Rational(6, 5) * ip;
}

Rational optimal_beta(const Rational& alpha, const Rational& ip) {
    const Rational inv = optimal_inv_beta(alpha, ip);
    require(inv > 0, "no finite optimal beta for these exponents");
    return 1 / inv;
}

CascadeResult cascade_simulate(const CascadeParams& c) {
    require(c.d >= 0.0 && c.d < 3.0, "cascade needs d in [0, 3)");
    require(c.energy > 0.0, "cascade needs positive energy");
    require(c.shells >= 1, "cascade needs at least one shell");
    require(c.p >= 1.0, "p must be >= 1");
    const double rate = 0.5 * (5.0 - c.d);
    const double ratio = std::pow(2.0, -rate);
    const double inv_p = std::isinf(c.p) ? 0.0 : 1.0 / c.p;
    const double besov_s = c.alpha + (1.0 - 2.0 * inv_p) * (3.0 - c.d) / 2.0;
    const double sqrt_e = std::sqrt(c.energy);
    auto shell_time = [&](int n) { return std::pow(lambda(n), -rate) / sqrt_e; };

    CascadeResult out;
    out.T_star = shell_time(c.start_shell) / (1.0 - ratio);
    out.enstrophy_ratio = std::pow(2.0, 0.5 * (c.d - 1.0));
    out.enstrophy_diverges = out.enstrophy_ratio >= 1.0;
    double cumulative = 0.0;
    double enstrophy = 0.0;
    for (int i = 0; i < c.shells; ++i) {
        const int n = c.start_shell + i;
        const double lam = lambda(n);
        const double tn = shell_time(n);
        cumulative += tn;
        enstrophy += lam * lam * c.energy * tn;
        out.rows.push_back({n, lam, tn, cumulative, shell_time(n + 1) / (1.0 - ratio),
                            std::pow(lam, c.alpha) * sqrt_e, std::pow(lam, besov_s) * sqrt_e,
                            enstrophy});
    }
    return out;
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y, int count) {
    require(x.size() == y.size(), "slope fit needs equally long series");
    require(count >= 2 && x.size() >= static_cast<std::size_t>(count),
            "slope fit needs at least two points");
    const std::size_t start = x.size() - static_cast<std::size_t>(count);
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = start; i < x.size(); ++i) {
        require(x[i] > 0.0 && y[i] > 0.0, "log-log fit needs positive data");
        const double lx = std::log(x[i]), ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double n = count;
    const double den = n * sxx - sx * sx;
    require(den != 0.0, "slope fit needs distinct abscissae");
    return (n * sxy - sx * sy) / den;
}

TermScales linear_vs_nonlinear(double lam, double energy, double d) {
    require(lam >= 1.0, "lambda must be >= 1");
    require(energy > 0.0, "energy must be positive");
    const double l = lam * lam * energy;
    const double n = std::pow(lam, 0.5 * (5.0 - d)) * std::pow(energy, 1.5);
    return {l, n, l > n};
}

double intermittency_estimate(const VelocityField& u, int q) {
    require(q >= 1, "intermittency estimate needs q >= 1");
    const VelocityField shell = shell_project(u, q);
    const double l2 = lp_norm(shell, 2.0);
    require(l2 > 0.0, "shell is empty");
    const double linf = lp_norm(shell, INFINITY);
    const double ratio = linf / l2 * std::pow(Grid::length, 1.5);
    const double d = 3.0 - 2.0 * std::log(ratio) / std::log(lambda(q));
    return std::clamp(d, 0.0, 3.0);
}

}  // namespace onsager
