#pragma once

#include <optional>
#include <vector>

#include "onsager/field.hpp"

namespace onsager {

/// Dyadic scale lambda_q = 2^q.
double lambda(int q);

/// Smooth radial cutoff: chi = 1 on [0, 3/4], 0 on [1, inf), and in between
/// the C-infinity blend psi(s) = g(1-s) / (g(s) + g(1-s)), g(s) = exp(-1/s),
/// s = 4 xi - 3.
class CutoffProfile {
public:
    double chi(double xi) const;
    /// phi_q(xi) = chi(xi / lambda_{q+1}) - chi(xi / lambda_q), q >= 0.
    double phi(int q, double xi) const;
    /// Multiplier of shell q >= -1 (q = -1 is chi itself).
    double shell_multiplier(int q, double xi) const;
    /// Multiplier of u_{<=q}: chi(xi / lambda_{q+1}).
    double low_pass_multiplier(int q, double xi) const;
};

/// Largest shell index Q = ceil(log2 kmax) + 1 carried by a decomposition.
int top_shell(const Grid& grid);

struct BesovSpec {
    double s = 0.0;
    double p = 2.0;  ///< space integrability, in [1, inf]
    double q = 2.0;  ///< summability, in [1, inf]
};

/// Littlewood-Paley pieces u_q, q = -1..Q.
struct DyadicShells {
    std::vector<VelocityField> shells;  ///< shells[q + 1] holds u_q

    int top() const { return static_cast<int>(shells.size()) - 2; }
    const VelocityField& shell(int q) const { return shells.at(q + 1); }
    VelocityField sum() const;
};

VelocityField shell_project(const VelocityField& u, int q);
DyadicShells decompose(const VelocityField& u);

/// u_{<=q} via the single multiplier chi(|k| / lambda_{q+1}).
VelocityField low_pass(const VelocityField& u, int q);

/// Norm of the sequence lambda_r^s ||u_r||_p over r = -1..Q in l^q.
/// The r = -1 block carries weight 1.
double besov_norm(const VelocityField& u, const BesovSpec& spec);
double besov_norm(const DyadicShells& shells, const BesovSpec& spec);

/// ||u_q||_r / (lambda_q^{3(1/s - 1/r)} ||u_q||_s) for a field that is
/// already a single shell. Empty when ||u_q||_s = 0.
std::optional<double> bernstein_check(const VelocityField& shell, int q, double s, double r);

/// Per-shell norms used by the CSV exporter and flux estimates.
struct ShellNorms {
    int q;
    double lambda_q;
    double l2;
    double l3;
    double lp;
    double linf;
};
std::vector<ShellNorms> shell_spectrum(const VelocityField& u, double p);

}  // namespace onsager
