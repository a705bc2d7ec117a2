#pragma once

#include <cstdint>
#include <vector>

#include "onsager/field.hpp"

namespace onsager {

/// Target L^2 norm per radial bin: bin m collects the modes with
/// round(|k|) == m, i.e. m - 1/2 <= |k| < m + 1/2.
struct SpectrumProfile {
    std::vector<double> bin_norm;
};

/// Equal share of `total` (in L^2 norm) over bins lo..hi.
SpectrumProfile band_profile(int lo, int hi, double total);
/// Bins lambda_q .. 3 lambda_q / 2, where phi_q is identically 1.
SpectrumProfile shell_profile(int q, double total);
/// Bin norms proportional to m^{-slope} for m = 1..kmax, scaled to `total`.
SpectrumProfile power_law_profile(int kmax, double slope, double total);

/// (sin x1 cos x2 cos x3, -cos x1 sin x2 cos x3, 0), built from its eight
/// exact Fourier coefficients.
VelocityField taylor_green(const Grid& grid);

/// (0, amplitude cos(k x1), 0): an exact steady-shape solution whose
/// nonlinear term vanishes identically.
VelocityField shear_mode(const Grid& grid, int k, double amplitude);

/// (0, cos(k x1), sin(k x1)): one wavevector pair with |u| = 1 everywhere.
VelocityField helical_mode(const Grid& grid, int k);

/// Random divergence-free field whose radial-bin L^2 norms equal the profile
/// exactly. Bins are normalized after projection, so the match holds for
/// every seed, not only in expectation. Deterministic in `seed`.
VelocityField random_divfree(const Grid& grid, const SpectrumProfile& profile,
                             std::uint64_t seed);

/// Field with intermittency dimension d at shell q: a constant-magnitude
/// helical carrier in shell q multiplied by a smooth indicator of the union
/// of ceil(lambda_q^d) random balls of radius ~ 1/lambda_q, covering a volume
/// fraction lambda_q^{d-3}, then restricted to shells q-1..q+1 and projected.
VelocityField intermittent_field(const Grid& grid, int q, double d, std::uint64_t seed);

}  // namespace onsager
