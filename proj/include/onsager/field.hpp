#pragma once

#include <array>
#include <optional>
#include <vector>

#include "onsager/fft.hpp"
#include "onsager/grid.hpp"

namespace onsager {

/// Real periodic vector field held by its Fourier coefficients,
/// u(x) = sum_k u_hat(k) e^{i k.x}, over the half spectrum of `grid`.
/// Conjugate symmetry u_hat(-k) = conj(u_hat(k)) is structural except on
/// the self-conjugate planes k3 = 0 and k3 = n/2, which every producer keeps
/// Hermitian.
class VelocityField {
public:
    VelocityField() = default;
    explicit VelocityField(const Grid& grid);

    const Grid& grid() const { return grid_; }

    SpectralArray& component(int c) { return coeffs_[c]; }
    const SpectralArray& component(int c) const { return coeffs_[c]; }

    /// Coefficient of component c at an arbitrary lattice vector with
    /// |k_i| <= n/2 (negative k3 resolved by conjugation).
    Complex coeff(int c, int k1, int k2, int k3) const;

    /// Sets u_hat(k) = value and u_hat(-k) = conj(value).
    void set_mode(int c, int k1, int k2, int k3, Complex value);

    std::optional<double> time;

    VelocityField& operator+=(const VelocityField& other);
    VelocityField& operator-=(const VelocityField& other);
    VelocityField& operator*=(double s);

private:
    Grid grid_{};
    std::array<SpectralArray, 3> coeffs_;
};

VelocityField operator+(VelocityField a, const VelocityField& b);
VelocityField operator-(VelocityField a, const VelocityField& b);
VelocityField operator*(double s, VelocityField a);

/// Point samples of a vector field on an m^3 grid over [0, 2pi)^3,
/// row-major with x1 slowest.
struct PhysicalField {
    int m = 0;
    std::array<RealArray, 3> comp;

    std::size_t size() const { return static_cast<std::size_t>(m) * m * m; }
};

/// Viscous trajectory: strictly increasing snapshot times on one grid.
class Trajectory {
public:
    Trajectory(double nu, std::vector<VelocityField> snapshots);

    double nu() const { return nu_; }
    const Grid& grid() const { return snapshots_.front().grid(); }
    const std::vector<VelocityField>& snapshots() const { return snapshots_; }
    std::size_t size() const { return snapshots_.size(); }
    double time(std::size_t i) const { return *snapshots_[i].time; }

private:
    double nu_;
    std::vector<VelocityField> snapshots_;
};

}  // namespace onsager
