#pragma once

#include "onsager/field.hpp"

namespace onsager {

/// Synthesizes samples on an m^3 grid (m >= n, default n); coefficients are
/// zero-padded when m > n.
PhysicalField to_physical(const VelocityField& u, int m = 0);

/// Inverse of to_physical: analyses samples and keeps the modes
/// representable on `grid`. Sample count must be m^3 with m >= grid.n.
VelocityField from_physical(const PhysicalField& samples, const Grid& grid);

/// u_hat(k) <- u_hat(k) - k (k.u_hat(k)) / |k|^2 for k != 0.
VelocityField leray_project(VelocityField u);

/// Zeroes every mode with |k|_inf > kmax.
VelocityField dealias(VelocityField u);
bool is_dealiased(const VelocityField& u);

/// Averages the self-conjugate planes so u_hat(-k) = conj(u_hat(k)) holds
/// exactly there as well.
void enforce_hermitian(VelocityField& u);

/// max_k |k.u_hat(k)| / |u_hat(k)| over nonzero modes (0 for the zero field).
double divergence_residual(const VelocityField& u);

/// Largest deviation from conjugate symmetry on the self-conjugate planes.
double hermitian_residual(const VelocityField& u);

/// (int |u|^p dx)^{1/p} over [0,2pi)^3 by uniform-grid quadrature on the
/// field's own grid; p = infinity gives the max of |u| over grid points.
double lp_norm(const VelocityField& u, double p);
double lp_norm(const PhysicalField& samples, double p);

/// ||u||_2^2 by Parseval, (2pi)^3 sum_k |u_hat(k)|^2.
double energy(const VelocityField& u);

/// ||grad u||_2^2 = (2pi)^3 sum_k |k|^2 |u_hat(k)|^2.
double gradient_energy(const VelocityField& u);

/// Largest absolute coefficient difference between two fields on one grid.
double max_coeff_diff(const VelocityField& a, const VelocityField& b);

}  // namespace onsager
