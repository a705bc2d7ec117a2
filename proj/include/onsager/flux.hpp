#pragma once

#include <array>
#include <optional>
#include <vector>

#include "onsager/field.hpp"

namespace onsager {

/// Spectra of the six independent entries of u (x) u, computed from
/// pointwise products on the alias-free sampling grid and truncated to the
/// field's grid. Order: 00, 01, 02, 11, 12, 22.
struct ProductSpectrum {
    std::array<SpectralArray, 6> entries;

    const SpectralArray& at(int i, int j) const;
};

ProductSpectrum product_spectrum(const VelocityField& u);

/// Pi_{<=q} = int tr((u (x) u)_{<=q} . grad u_{<=q}) dx, sign as in the
/// truncated energy equality (positive = energy gained by scales <= lambda_q).
double energy_flux(const VelocityField& u, int q);
double energy_flux(const VelocityField& u, const ProductSpectrum& uu, int q);

/// Pi_{<=q} for q = -1..Q, sharing one product evaluation.
std::vector<double> flux_profile(const VelocityField& u);

/// [sum_{r<q} lambda_r^{2/3} a_r^2 lambda_{|r-q|}^{-4/3}]^{3/2}
///   + [sum_{r>=q} lambda_r^{2/3} a_r^2 lambda_{|r-q|}^{-2/3}]^{3/2}
/// with a_r = ||u_r||_3 given for r = -1, 0, 1, ... (l3_norms[r + 1]).
double flux_estimate_rhs(const std::vector<double>& l3_norms, int q);

/// |Pi_{<=q}| / flux_estimate_rhs. Empty when both vanish; throws
/// NumericalError when the estimate vanishes but the flux does not.
std::optional<double> flux_bound_ratio(const VelocityField& u, int q);
/// flux_bound_ratio for q = -1..Q with shared shell norms and products.
std::vector<std::optional<double>> flux_bound_ratios(const VelocityField& u);

/// ||u_r||_2^{(2p-6)/(p-2)} ||u_r||_p^{p/(p-2)}, p >= 3 (p = inf allowed).
double holder_shell_bound(double l2, double lp, double p);

struct BernsteinShellBound {
    double bound;
    double lambda_exponent;    ///< 3/2 + 3 beta/p - 3 beta/2
    bool exponent_nonnegative; ///< equivalent to 2/p + 1/beta >= 1
};

/// C ||u_r||_2^{3-beta} ||u_r||_p^beta lambda_r^{3/2 + 3beta/p - 3beta/2}.
BernsteinShellBound bernstein_shell_bound(double l2, double lp, double p, double beta, int r,
                                          double constant = 1.0);

/// Energy budget of one snapshot, per q = -1..Q and untruncated.
struct SnapshotBudget {
    double t = 0.0;
    double energy = 0.0;         ///< ||u||_2^2
    double grad_energy = 0.0;    ///< ||grad u||_2^2
    std::vector<double> low_energy;  ///< 1/2 ||u_{<=q}||_2^2
    std::vector<double> low_grad;    ///< ||grad u_{<=q}||_2^2
    std::vector<double> flux;        ///< Pi_{<=q}
};

SnapshotBudget snapshot_budget(const VelocityField& u);

/// One (time, q) row of the truncated energy balance.
struct FluxRow {
    double t;
    int q;
    double flux;
    double dissipation;  ///< nu ||grad u_{<=q}||_2^2
    double energy;       ///< 1/2 ||u_{<=q}||_2^2
    double residual;     ///< |LHS - RHS| accumulated from the first snapshot
};

struct FluxSummary {
    int q;
    double lambda_q;
    double int_abs_flux;  ///< trapezoid integral of |Pi_{<=q}| over the run
};

/// Untruncated balance ||u(t)||^2 + 2 nu int ||grad u||^2 - ||u(t0)||^2.
struct EnergyRow {
    double t;
    double energy;
    double dissipated;  ///< 2 nu int_{t0}^{t} ||grad u||^2
    double residual;
};

struct FluxReport {
    double nu = 0.0;
    std::vector<FluxRow> rows;
    std::vector<FluxSummary> summary;
    std::vector<EnergyRow> energy;

    double max_relative_residual() const;         ///< truncated rows, / (1/2 ||u(t0)||^2)
    double max_relative_energy_residual() const;  ///< untruncated, / ||u(t0)||^2
};

/// Accumulates budgets snapshot by snapshot (t0 = first snapshot), so
/// trajectories never need to be held in memory.
class FluxReportBuilder {
public:
    explicit FluxReportBuilder(double nu);
    void add(const SnapshotBudget& b);
    void add(const VelocityField& u) { add(snapshot_budget(u)); }
    const FluxReport& report() const { return report_; }

private:
    FluxReport report_;
    std::optional<SnapshotBudget> first_;
    std::optional<SnapshotBudget> prev_;
    std::vector<double> integral_;    // int (-nu ||grad u_<=q||^2 + Pi) per q
    std::vector<double> abs_flux_;    // int |Pi| per q
    double dissipated_ = 0.0;
};

FluxReport flux_report(const Trajectory& traj);

struct BalanceSeries {
    std::vector<double> times;
    std::vector<double> interval_residual;    ///< per consecutive pair; [0] = 0
    std::vector<double> cumulative_residual;  ///< from the first snapshot
};

/// Residuals of 1/2||u_{<=q}(t)||^2 = 1/2||u_{<=q}(t0)||^2 + int(-nu||grad u_{<=q}||^2 + Pi_{<=q}).
BalanceSeries truncated_balance(const Trajectory& traj, int q);

/// Residuals of ||u(t)||^2 + 2 nu int ||grad u||^2 = ||u(t0)||^2.
BalanceSeries energy_balance_residual(const Trajectory& traj);

/// int_0^T |Pi_{<=q}| ds for q = q_lo..q_hi.
std::vector<double> flux_time_integrals(const Trajectory& traj, int q_lo, int q_hi);

}  // namespace onsager
