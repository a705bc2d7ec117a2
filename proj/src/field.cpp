#include "onsager/field.hpp"

#include <string>

#include "onsager/error.hpp"

namespace onsager {

Grid make_grid(int n) {
    require(n >= 8, "grid size must be at least 8, got " + std::to_string(n));
    require(n % 2 == 0, "grid size must be even, got " + std::to_string(n));
    return Grid{n, n / 3};
}

VelocityField::VelocityField(const Grid& grid) : grid_(grid) {
    for (auto& c : coeffs_) c.assign(grid.spectral_size(), Complex{});
}

Complex VelocityField::coeff(int c, int k1, int k2, int k3) const {
    const int h = grid_.n / 2;
    require(std::abs(k1) <= h && std::abs(k2) <= h && std::abs(k3) <= h,
            "wavenumber outside the grid");
    if (k3 < 0) return std::conj(coeff(c, -k1, -k2, -k3));
    const auto idx = grid_.spectral_index(grid_.index_of(k1 == h ? -h : k1),
                                          grid_.index_of(k2 == h ? -h : k2), k3);
    return coeffs_[c][idx];
}

void VelocityField::set_mode(int c, int k1, int k2, int k3, Complex value) {
    const int h = grid_.n / 2;
    require(std::abs(k1) <= h && std::abs(k2) <= h && std::abs(k3) <= h,
            "wavenumber outside the grid");
    if (k3 < 0) {
        set_mode(c, -k1, -k2, -k3, std::conj(value));
        return;
    }
    auto idx_of = [&](int k) { return grid_.index_of(k == h ? -h : k); };
    const auto idx = grid_.spectral_index(idx_of(k1), idx_of(k2), k3);
    if (k3 != 0 && k3 != h) {
        coeffs_[c][idx] = value;
        return;
    }
    const auto mirror = grid_.spectral_index(idx_of(-k1), idx_of(-k2), k3);
    if (mirror == idx) {
        coeffs_[c][idx] = Complex(value.real(), 0.0);
    } else {
        coeffs_[c][idx] = value;
        coeffs_[c][mirror] = std::conj(value);
    }
}

VelocityField& VelocityField::operator+=(const VelocityField& other) {
    require(grid_ == other.grid_, "grid mismatch in field addition");
    for (int c = 0; c < 3; ++c)
        for (std::size_t i = 0; i < coeffs_[c].size(); ++i) coeffs_[c][i] += other.coeffs_[c][i];
    return *this;
}

VelocityField& VelocityField::operator-=(const VelocityField& other) {
    require(grid_ == other.grid_, "grid mismatch in field subtraction");
    for (int c = 0; c < 3; ++c)
        for (std::size_t i = 0; i < coeffs_[c].size(); ++i) coeffs_[c][i] -= other.coeffs_[c][i];
    return *this;
}

VelocityField& VelocityField::operator*=(double s) {
    for (auto& comp : coeffs_)
        for (auto& v : comp) v *= s;
    return *this;
}

VelocityField operator+(VelocityField a, const VelocityField& b) { return a += b; }
VelocityField operator-(VelocityField a, const VelocityField& b) { return a -= b; }
VelocityField operator*(double s, VelocityField a) { return a *= s; }

Trajectory::Trajectory(double nu, std::vector<VelocityField> snapshots)
    : nu_(nu), snapshots_(std::move(snapshots)) {
    require(nu_ > 0.0, "trajectory viscosity must be positive");
    require(snapshots_.size() >= 2, "trajectory needs at least 2 snapshots");
    for (std::size_t i = 0; i < snapshots_.size(); ++i) {
        require(snapshots_[i].time.has_value(), "trajectory snapshot without time stamp");
        require(snapshots_[i].grid() == snapshots_.front().grid(),
                "trajectory snapshots must share one grid");
        if (i > 0)
            require(*snapshots_[i].time > *snapshots_[i - 1].time,
                    "trajectory times must be strictly increasing");
    }
}

}  // namespace onsager
