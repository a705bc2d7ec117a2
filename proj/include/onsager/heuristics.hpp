#pragma once

#include <string>
#include <vector>

#include "onsager/field.hpp"
#include "onsager/rational.hpp"

namespace onsager {

/// f(alpha, p, d) = (2 alpha + (1 - 2/p)(3 - d)) / (d - 5), with d in [0, 3].
double f_exponent(double alpha, double p, double d);

enum class WorstDimension { Zero, OneMinus };

std::string to_string(WorstDimension w);

struct WorstCase {
    WorstDimension d;
    Rational f;  ///< f at d = 0, or its limit as d -> 1 from below
};

/// d = 0 when alpha > 1 - 2/p, otherwise 1-.
WorstCase worst_d(const Rational& alpha, const Rational& inv_p);

/// 1/beta = alpha/2 + 1/2 - 1/p for alpha <= 1 - 2/p, and
/// 2 alpha/5 + 3/5 - 6/(5p) above.
Rational optimal_inv_beta(const Rational& alpha, const Rational& inv_p);

/// Reciprocal of optimal_inv_beta; throws if that is not positive.
Rational optimal_beta(const Rational& alpha, const Rational& inv_p);

struct CascadeParams {
    double d = 0.0;
    double energy = 1.0;
    int start_shell = 0;
    int shells = 40;
    double alpha = 1.0;  ///< regularity of the reported H^alpha and B^alpha_{p,inf} norms
    double p = 2.0;
};

struct CascadeRow {
    int n;
    double lambda_n;
    double T_n;           ///< E^{-1/2} lambda_n^{-(5-d)/2}
    double cumulative_t;  ///< sum of T_m for m <= n
    double remaining_t;   ///< T* - cumulative_t
    double h_alpha_norm;  ///< lambda_n^alpha sqrt(E)
    double besov_norm;    ///< lambda_n^{alpha + (1-2/p)(3-d)/2} sqrt(E)
    double enstrophy_partial_sum;  ///< sum of lambda_m^2 E T_m for m <= n
};

struct CascadeResult {
    std::vector<CascadeRow> rows;
    double T_star;
    double enstrophy_ratio;   ///< ratio of consecutive enstrophy terms, 2^{(d-1)/2}
    bool enstrophy_diverges;  ///< ratio >= 1
};

/// Energy passes shell to shell at the rate Flux ~ lambda^{(5-d)/2} E^{3/2}.
CascadeResult cascade_simulate(const CascadeParams& params);

/// Least-squares slope of log y against log x over the last `count` points.
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y, int count = 10);

struct TermScales {
    double linear;     ///< lambda^2 E
    double nonlinear;  ///< lambda^{(5-d)/2} E^{3/2}
    bool linear_dominates;
};

TermScales linear_vs_nonlinear(double lambda, double energy, double d);

/// d = 3 - 2 log(||u_q||_inf / ||u_q||_2 (2pi)^{3/2}) / log lambda_q, clipped to
/// [0, 3]. Requires q >= 1 and a nonzero shell.
double intermittency_estimate(const VelocityField& u, int q);

}  // namespace onsager
