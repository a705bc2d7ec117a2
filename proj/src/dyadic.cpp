#include "onsager/dyadic.hpp"

#include <cmath>

#include "onsager/error.hpp"
#include "onsager/spectral.hpp"

namespace onsager {

double lambda(int q) { return std::ldexp(1.0, q); }

namespace {
double g(double s) { return s > 0.0 ? std::exp(-1.0 / s) : 0.0; }

// Applies a real radial multiplier m(|k|) to every component.
template <class M>
VelocityField apply_radial(const VelocityField& u, M&& mult) {
    VelocityField out(u.grid());
    out.time = u.time;
    for_each_mode(u.grid(), [&](std::size_t idx, int k1, int k2, int k3, double) {
        const double xi = std::sqrt(double(k1) * k1 + double(k2) * k2 + double(k3) * k3);
        const double m = mult(xi);
        if (m == 0.0) return;
        for (int c = 0; c < 3; ++c) out.component(c)[idx] = m * u.component(c)[idx];
    });
    return out;
}
}  // namespace

double CutoffProfile::chi(double xi) const {
    require(xi >= 0.0, "cutoff evaluated at negative frequency");
    if (xi <= 0.75) return 1.0;
    if (xi >= 1.0) return 0.0;
    const double s = 4.0 * xi - 3.0;
    const double a = g(1.0 - s);
    return a / (g(s) + a);
}

double CutoffProfile::phi(int q, double xi) const {
    require(q >= 0, "phi_q needs q >= 0");
    return chi(xi / lambda(q + 1)) - chi(xi / lambda(q));
}

double CutoffProfile::shell_multiplier(int q, double xi) const {
    require(q >= -1, "shell index below -1");
    return q == -1 ? chi(xi) : phi(q, xi);
}

double CutoffProfile::low_pass_multiplier(int q, double xi) const {
    require(q >= -1, "low-pass index below -1");
    return chi(xi / lambda(q + 1));
}

int top_shell(const Grid& grid) {
    return static_cast<int>(std::ceil(std::log2(static_cast<double>(grid.kmax)))) + 1;
}

VelocityField DyadicShells::sum() const {
    VelocityField total = shells.front();
    for (std::size_t i = 1; i < shells.size(); ++i) total += shells[i];
    return total;
}

VelocityField shell_project(const VelocityField& u, int q) {
    require(q >= -1 && q <= top_shell(u.grid()),
            "shell index " + std::to_string(q) + " outside -1.." +
                std::to_string(top_shell(u.grid())));
    const CutoffProfile cut;
    return apply_radial(u, [&](double xi) { return cut.shell_multiplier(q, xi); });
}

DyadicShells decompose(const VelocityField& u) {
    DyadicShells out;
    const int top = top_shell(u.grid());
    out.shells.reserve(top + 2);
    for (int q = -1; q <= top; ++q) out.shells.push_back(shell_project(u, q));
    return out;
}

VelocityField low_pass(const VelocityField& u, int q) {
    require(q >= -1, "low-pass index below -1");
    const CutoffProfile cut;
    return apply_radial(u, [&](double xi) { return cut.low_pass_multiplier(q, xi); });
}

double besov_norm(const DyadicShells& shells, const BesovSpec& spec) {
    require(spec.p >= 1.0 && spec.q >= 1.0, "Besov exponents p, q must be >= 1");
    std::vector<double> terms;
    for (int r = -1; r <= shells.top(); ++r) {
        const double weight = r == -1 ? 1.0 : std::pow(lambda(r), spec.s);
        terms.push_back(weight * lp_norm(shells.shell(r), spec.p));
    }
    double peak = 0.0;
    for (double t : terms) peak = std::max(peak, t);
    if (std::isinf(spec.q) || peak == 0.0) return peak;
    double sum = 0.0;
    for (double t : terms) sum += std::pow(t / peak, spec.q);
    return peak * std::pow(sum, 1.0 / spec.q);
}

double besov_norm(const VelocityField& u, const BesovSpec& spec) {
    return besov_norm(decompose(u), spec);
}

std::optional<double> bernstein_check(const VelocityField& shell, int q, double s, double r) {
    require(s >= 1.0, "Bernstein lower exponent must be >= 1");
    require(r >= s, "Bernstein needs r >= s");
    const PhysicalField samples = to_physical(shell);
    const double low = lp_norm(samples, s);
    if (low == 0.0) return std::nullopt;
    const double high = lp_norm(samples, r);
    const double inv_r = std::isinf(r) ? 0.0 : 1.0 / r;
    const double exponent = 3.0 * (1.0 / s - inv_r);
    const double scale = q == -1 ? 1.0 : std::pow(lambda(q), exponent);
    return high / (scale * low);
}

std::vector<ShellNorms> shell_spectrum(const VelocityField& u, double p) {
    const DyadicShells sh = decompose(u);
    std::vector<ShellNorms> rows;
    for (int q = -1; q <= sh.top(); ++q) {
        const PhysicalField s = to_physical(sh.shell(q));
        rows.push_back({q, lambda(q), lp_norm(s, 2.0), lp_norm(s, 3.0), lp_norm(s, p),
                        lp_norm(s, INFINITY)});
    }
    return rows;
}

}  // namespace onsager
