#include "onsager/flux.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "onsager/dyadic.hpp"
#include "onsager/error.hpp"
#include "onsager/parallel.hpp"
#include "onsager/spectral.hpp"

namespace onsager {

namespace {
constexpr std::array<std::array<int, 3>, 3> kPairIndex{{{0, 1, 2}, {1, 3, 4}, {2, 4, 5}}};

// Forward transform of m^3 samples, scaled and truncated to `grid`.
SpectralArray analyse_scalar(RealArray& samples, int m, const Grid& grid) {
    const RealFft3& fft = RealFft3::get(m);
    SpectralArray spec;
    fft.forward(samples, spec);
    const int mh = m / 2 + 1;
    const double scale = 1.0 / (static_cast<double>(m) * m * m);
    SpectralArray out(grid.spectral_size());
    for_each_mode(grid, [&](std::size_t idx, int k1, int k2, int k3, double) {
        const int i = k1 >= 0 ? k1 : k1 + m;
        const int j = k2 >= 0 ? k2 : k2 + m;
        out[idx] = spec[(static_cast<std::size_t>(i) * m + j) * mh + k3] * scale;
    });
    return out;
}

// Per-mode contributions shared by every truncation level.
struct ModeTerms {
    double xi;
    double energy;  // w |u_hat|^2
    double grad;    // w |k|^2 |u_hat|^2
    double flux;    // w Re sum_il A_il conj(i k_l u_i)
};

std::vector<ModeTerms> mode_terms(const VelocityField& u, const ProductSpectrum& uu) {
    std::vector<ModeTerms> terms;
    terms.reserve(u.grid().spectral_size());
    for_each_mode(u.grid(), [&](std::size_t idx, int k1, int k2, int k3, double w) {
        const std::array<double, 3> k{double(k1), double(k2), double(k3)};
        const double k2sum = k[0] * k[0] + k[1] * k[1] + k[2] * k[2];
        double e = 0.0;
        double f = 0.0;
        for (int i = 0; i < 3; ++i) {
            const Complex ui = u.component(i)[idx];
            e += std::norm(ui);
            for (int l = 0; l < 3; ++l) {
                const Complex grad = Complex(0.0, k[l]) * ui;
                f += (uu.at(i, l)[idx] * std::conj(grad)).real();
            }
        }
        if (e == 0.0 && f == 0.0) return;
        terms.push_back({std::sqrt(k2sum), w * e, w * k2sum * e, w * f});
    });
    return terms;
}
}  // namespace

const SpectralArray& ProductSpectrum::at(int i, int j) const { return entries[kPairIndex[i][j]]; }

ProductSpectrum product_spectrum(const VelocityField& u) {
    const Grid& g = u.grid();
    const int m = g.product_size();
    const PhysicalField s = to_physical(u, m);
    ProductSpectrum out;
    RealArray prod(s.size());
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) {
            for (std::size_t p = 0; p < prod.size(); ++p) prod[p] = s.comp[i][p] * s.comp[j][p];
            out.entries[kPairIndex[i][j]] = analyse_scalar(prod, m, g);
        }
    return out;
}

double energy_flux(const VelocityField& u, const ProductSpectrum& uu, int q) {
    require(q >= -1, "flux index below -1");
    const CutoffProfile cut;
    double total = 0.0;
    for (const ModeTerms& t : mode_terms(u, uu)) {
        const double m = cut.low_pass_multiplier(q, t.xi);
        total += m * m * t.flux;
    }
    return u.grid().volume() * total;
}

double energy_flux(const VelocityField& u, int q) {
    require(is_dealiased(u), "energy flux needs a dealiased field");
    return energy_flux(u, product_spectrum(u), q);
}

std::vector<double> flux_profile(const VelocityField& u) {
    return snapshot_budget(u).flux;
}

double flux_estimate_rhs(const std::vector<double>& l3_norms, int q) {
    double below = 0.0;
    double above = 0.0;
    for (std::size_t idx = 0; idx < l3_norms.size(); ++idx) {
        const int r = static_cast<int>(idx) - 1;
        const double a = l3_norms[idx];
        require(a >= 0.0, "shell norms must be nonnegative");
        if (a == 0.0) continue;
        const double base = std::pow(lambda(r), 2.0 / 3.0) * a * a;
        const int gap = std::abs(r - q);
        if (r < q)
            below += base * std::pow(lambda(gap), -4.0 / 3.0);
        else
            above += base * std::pow(lambda(gap), -2.0 / 3.0);
    }
    return std::pow(below, 1.5) + std::pow(above, 1.5);
}

namespace {
std::vector<double> shell_l3_norms(const VelocityField& u) {
    std::vector<double> l3;
    const DyadicShells sh = decompose(u);
    for (int r = -1; r <= sh.top(); ++r) l3.push_back(lp_norm(sh.shell(r), 3.0));
    return l3;
}

std::optional<double> ratio(double flux, double rhs) {
    flux = std::abs(flux);
    if (rhs == 0.0) {
        if (flux == 0.0) return std::nullopt;
        throw NumericalError("flux estimate vanishes while the flux does not");
    }
    return flux / rhs;
}
}  // namespace

std::optional<double> flux_bound_ratio(const VelocityField& u, int q) {
    return ratio(energy_flux(u, q), flux_estimate_rhs(shell_l3_norms(u), q));
}

std::vector<std::optional<double>> flux_bound_ratios(const VelocityField& u) {
    const std::vector<double> flux = flux_profile(u);
    const std::vector<double> l3 = shell_l3_norms(u);
    std::vector<std::optional<double>> out;
    for (int q = -1; q < static_cast<int>(flux.size()) - 1; ++q)
        out.push_back(ratio(flux[q + 1], flux_estimate_rhs(l3, q)));
    return out;
}

double holder_shell_bound(double l2, double lp, double p) {
    require(p >= 3.0, "Hölder shell bound needs p >= 3");
    if (std::isinf(p)) return l2 * l2 * lp;
    return std::pow(l2, (2.0 * p - 6.0) / (p - 2.0)) * std::pow(lp, p / (p - 2.0));
}

BernsteinShellBound bernstein_shell_bound(double l2, double lp, double p, double beta, int r,
                                          double constant) {
    require(p >= 1.0, "Bernstein shell bound needs p >= 1");
    require(beta > 0.0 && beta <= 3.0, "Bernstein shell bound needs 0 < beta <= 3");
    const double inv_p = std::isinf(p) ? 0.0 : 1.0 / p;
    const double exponent = 1.5 + 3.0 * beta * inv_p - 1.5 * beta;
    const double bound =
        constant * std::pow(l2, 3.0 - beta) * std::pow(lp, beta) * std::pow(lambda(r), exponent);
    return {bound, exponent, 2.0 * inv_p + 1.0 / beta >= 1.0};
}

SnapshotBudget snapshot_budget(const VelocityField& u) {
    require(is_dealiased(u), "energy budget needs a dealiased field");
    SnapshotBudget b;
    b.t = u.time.value_or(0.0);
    b.energy = energy(u);
    b.grad_energy = gradient_energy(u);
    const ProductSpectrum uu = product_spectrum(u);
    const std::vector<ModeTerms> terms = mode_terms(u, uu);
    const int top = top_shell(u.grid());
    const CutoffProfile cut;
    const double vol = u.grid().volume();
    for (int q = -1; q <= top; ++q) {
        double e = 0.0, gr = 0.0, f = 0.0;
        for (const ModeTerms& t : terms) {
            const double m = cut.low_pass_multiplier(q, t.xi);
            if (m == 0.0) continue;
            const double m2 = m * m;
            e += m2 * t.energy;
            gr += m2 * t.grad;
            f += m2 * t.flux;
        }
        b.low_energy.push_back(0.5 * vol * e);
        b.low_grad.push_back(vol * gr);
        b.flux.push_back(vol * f);
    }
    return b;
}

FluxReportBuilder::FluxReportBuilder(double nu) {
    require(nu > 0.0, "viscosity must be positive");
    report_.nu = nu;
}

void FluxReportBuilder::add(const SnapshotBudget& b) {
    const double nu = report_.nu;
    const std::size_t nq = b.flux.size();
    if (!first_) {
        first_ = b;
        integral_.assign(nq, 0.0);
        abs_flux_.assign(nq, 0.0);
    } else {
        require(b.t > prev_->t, "snapshot times must be strictly increasing");
        require(nq == prev_->flux.size(), "snapshots must share one grid");
        const double h = b.t - prev_->t;
        for (std::size_t i = 0; i < nq; ++i) {
            const double g0 = -nu * prev_->low_grad[i] + prev_->flux[i];
            const double g1 = -nu * b.low_grad[i] + b.flux[i];
            integral_[i] += 0.5 * h * (g0 + g1);
            abs_flux_[i] += 0.5 * h * (std::abs(prev_->flux[i]) + std::abs(b.flux[i]));
        }
        dissipated_ += nu * h * (prev_->grad_energy + b.grad_energy);
    }
    for (std::size_t i = 0; i < nq; ++i) {
        const double residual = std::abs(b.low_energy[i] - first_->low_energy[i] - integral_[i]);
        report_.rows.push_back({b.t, static_cast<int>(i) - 1, b.flux[i], nu * b.low_grad[i],
                                b.low_energy[i], residual});
    }
    report_.energy.push_back(
        {b.t, b.energy, dissipated_, std::abs(b.energy + dissipated_ - first_->energy)});
    report_.summary.clear();
    for (std::size_t i = 0; i < nq; ++i) {
        const int q = static_cast<int>(i) - 1;
        report_.summary.push_back({q, lambda(q), abs_flux_[i]});
    }
    prev_ = b;
}

double FluxReport::max_relative_residual() const {
    if (energy.empty() || energy.front().energy == 0.0) {
        double worst = 0.0;
        for (const auto& r : rows) worst = std::max(worst, r.residual);
        return worst;
    }
    const double scale = 0.5 * energy.front().energy;
    double worst = 0.0;
    for (const auto& r : rows) worst = std::max(worst, r.residual / scale);
    return worst;
}

double FluxReport::max_relative_energy_residual() const {
    if (energy.empty()) return 0.0;
    const double scale = energy.front().energy;
    double worst = 0.0;
    for (const auto& r : energy) worst = std::max(worst, scale > 0.0 ? r.residual / scale : r.residual);
    return worst;
}

FluxReport flux_report(const Trajectory& traj) {
    const auto& snaps = traj.snapshots();
    std::vector<SnapshotBudget> budgets(snaps.size());
    parallel_for(snaps.size(), thread_cap(), [&](std::size_t i) { budgets[i] = snapshot_budget(snaps[i]); });
    FluxReportBuilder builder(traj.nu());
    for (const auto& b : budgets) builder.add(b);
    return builder.report();
}

namespace {
BalanceSeries balance_from(const std::vector<double>& t, const std::vector<double>& lhs,
                           const std::vector<double>& rate) {
    BalanceSeries out;
    out.times = t;
    double integral = 0.0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i == 0) {
            out.interval_residual.push_back(0.0);
            out.cumulative_residual.push_back(0.0);
            continue;
        }
        const double step = 0.5 * (t[i] - t[i - 1]) * (rate[i - 1] + rate[i]);
        integral += step;
        out.interval_residual.push_back(std::abs(lhs[i] - lhs[i - 1] - step));
        out.cumulative_residual.push_back(std::abs(lhs[i] - lhs[0] - integral));
    }
    return out;
}
}  // namespace

BalanceSeries truncated_balance(const Trajectory& traj, int q) {
    require(q >= -1 && q <= top_shell(traj.grid()), "balance shell index out of range");
    std::vector<double> t, lhs, rate;
    for (const auto& u : traj.snapshots()) {
        const SnapshotBudget b = snapshot_budget(u);
        const std::size_t i = static_cast<std::size_t>(q + 1);
        t.push_back(b.t);
        lhs.push_back(b.low_energy[i]);
        rate.push_back(-traj.nu() * b.low_grad[i] + b.flux[i]);
    }
    return balance_from(t, lhs, rate);
}

BalanceSeries energy_balance_residual(const Trajectory& traj) {
    std::vector<double> t, lhs, rate;
    for (const auto& u : traj.snapshots()) {
        t.push_back(*u.time);
        lhs.push_back(energy(u));
        rate.push_back(-2.0 * traj.nu() * gradient_energy(u));
    }
    return balance_from(t, lhs, rate);
}

std::vector<double> flux_time_integrals(const Trajectory& traj, int q_lo, int q_hi) {
    require(q_lo >= -1 && q_lo <= q_hi && q_hi <= top_shell(traj.grid()),
            "flux integral shell range invalid");
    const FluxReport rep = flux_report(traj);
    std::vector<double> out;
    for (int q = q_lo; q <= q_hi; ++q) out.push_back(rep.summary[q + 1].int_abs_flux);
    return out;
}

}  // namespace onsager
