#include "onsager/generators.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>

#include "onsager/dyadic.hpp"
#include "onsager/error.hpp"
#include "onsager/spectral.hpp"

namespace onsager {

namespace {
int radial_bin(int k1, int k2, int k3) {
    return static_cast<int>(std::lround(std::sqrt(double(k1) * k1 + double(k2) * k2 + double(k3) * k3)));
}
}  // namespace

SpectrumProfile band_profile(int lo, int hi, double total) {
    require(0 <= lo && lo <= hi, "band profile needs 0 <= lo <= hi");
    require(total >= 0.0, "profile amplitude must be nonnegative");
    SpectrumProfile p;
    p.bin_norm.assign(hi + 1, 0.0);
    const double each = total / std::sqrt(static_cast<double>(hi - lo + 1));
    for (int m = lo; m <= hi; ++m) p.bin_norm[m] = each;
    return p;
}

SpectrumProfile shell_profile(int q, double total) {
    require(q >= 0, "shell profile needs q >= 0");
    const int lo = static_cast<int>(lambda(q));
    const int hi = static_cast<int>(std::floor(1.5 * lambda(q)));
    return band_profile(lo, hi, total);
}

SpectrumProfile power_law_profile(int kmax, double slope, double total) {
    require(kmax >= 1, "power-law profile needs kmax >= 1");
    SpectrumProfile p;
    p.bin_norm.assign(kmax + 1, 0.0);
    double sumsq = 0.0;
    for (int m = 1; m <= kmax; ++m) {
        p.bin_norm[m] = std::pow(static_cast<double>(m), -slope);
        sumsq += p.bin_norm[m] * p.bin_norm[m];
    }
    const double scale = sumsq > 0.0 ? total / std::sqrt(sumsq) : 0.0;
    for (double& v : p.bin_norm) v *= scale;
    return p;
}

VelocityField taylor_green(const Grid& grid) {
    VelocityField u(grid);
    for (int s1 : {-1, 1})
        for (int s2 : {-1, 1})
            for (int s3 : {-1, 1}) {
                if (s3 < 0) continue;  // the k3 < 0 half is implied
                u.set_mode(0, s1, s2, s3, Complex(0.0, -0.125 * s1));
                u.set_mode(1, s1, s2, s3, Complex(0.0, 0.125 * s2));
            }
    u.time = 0.0;
    return u;
}

VelocityField shear_mode(const Grid& grid, int k, double amplitude) {
    require(k >= 1 && k <= grid.kmax, "shear wavenumber outside the dealiased range");
    VelocityField u(grid);
    u.set_mode(1, k, 0, 0, Complex(0.5 * amplitude, 0.0));
    u.time = 0.0;
    return u;
}

VelocityField helical_mode(const Grid& grid, int k) {
    require(k >= 1 && k <= grid.kmax, "helical wavenumber outside the dealiased range");
    VelocityField u(grid);
    u.set_mode(1, k, 0, 0, Complex(0.5, 0.0));
    u.set_mode(2, k, 0, 0, Complex(0.0, -0.5));
    u.time = 0.0;
    return u;
}

VelocityField random_divfree(const Grid& grid, const SpectrumProfile& profile,
                             std::uint64_t seed) {
    for (std::size_t m = 0; m < profile.bin_norm.size(); ++m) {
        require(profile.bin_norm[m] >= 0.0, "spectrum profile must be nonnegative");
        require(profile.bin_norm[m] == 0.0 || static_cast<int>(m) <= grid.kmax,
                "spectrum profile populates bin " + std::to_string(m) + " beyond kmax " +
                    std::to_string(grid.kmax));
    }
    const int nbins = static_cast<int>(profile.bin_norm.size());
    auto target = [&](int m) { return m < nbins ? profile.bin_norm[m] : 0.0; };

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    VelocityField u(grid);
    for_each_mode(grid, [&](std::size_t idx, int k1, int k2, int k3, double) {
        const int m = radial_bin(k1, k2, k3);
        if (target(m) == 0.0) return;
        for (int c = 0; c < 3; ++c) {
            const double re = normal(rng);
            const double im = normal(rng);
            u.component(c)[idx] = Complex(re, im);
        }
    });
    enforce_hermitian(u);
    u = leray_project(std::move(u));

    std::vector<double> have(std::max(nbins, 1), 0.0);
    for_each_mode(grid, [&](std::size_t idx, int k1, int k2, int k3, double w) {
        const int m = radial_bin(k1, k2, k3);
        if (m >= nbins) return;
        for (int c = 0; c < 3; ++c) have[m] += w * std::norm(u.component(c)[idx]);
    });
    for_each_mode(grid, [&](std::size_t idx, int k1, int k2, int k3, double) {
        const int m = radial_bin(k1, k2, k3);
        if (m >= nbins || have[m] == 0.0) return;
        const double s = target(m) / std::sqrt(grid.volume() * have[m]);
        for (int c = 0; c < 3; ++c) u.component(c)[idx] *= s;
    });
    u.time = 0.0;
    return u;
}

namespace {

using Vec3 = std::array<double, 3>;

Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Vec3 normalized(Vec3 v) {
    const double n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    for (double& x : v) x /= n;
    return v;
}

// Bumps equal 1 inside radius rho and vanish beyond this multiple of rho.
constexpr double kBumpOuterFactor = 4.0 / 3.0;

}  // namespace

VelocityField intermittent_field(const Grid& grid, int q, double d, std::uint64_t seed) {
    require(d >= 0.0 && d <= 3.0, "intermittency dimension must lie in [0, 3]");
    require(q >= 1, "intermittent field needs shell index q >= 1");
    const double lam = lambda(q);
    require(lam <= grid.kmax, "shell " + std::to_string(q) + " too large for grid n=" +
                                  std::to_string(grid.n));

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    // Carrier wavevector: lattice vectors with |k| in [lambda, 1.25 lambda]
    // and components well inside the dealiased cube.
    std::vector<std::array<int, 3>> candidates;
    const int kcap = (3 * grid.kmax) / 4;
    for (int a = -kcap; a <= kcap; ++a)
        for (int b = -kcap; b <= kcap; ++b)
            for (int c = 0; c <= kcap; ++c) {
                const double r = std::sqrt(double(a) * a + double(b) * b + double(c) * c);
                if (r >= lam && r <= 1.25 * lam) candidates.push_back({a, b, c});
            }
    require(!candidates.empty(), "no carrier wavevector available for this shell");
    const auto k0 = candidates[static_cast<std::size_t>(unit(rng) * candidates.size()) %
                               candidates.size()];
    const Vec3 kdir = normalized({double(k0[0]), double(k0[1]), double(k0[2])});
    Vec3 trial{unit(rng) - 0.5, unit(rng) - 0.5, unit(rng) - 0.5};
    Vec3 e1 = normalized(cross(kdir, trial));
    Vec3 e2 = cross(kdir, e1);
    const double phase0 = 2.0 * std::numbers::pi * unit(rng);

    const int n = grid.n;
    const double h = Grid::length / n;
    PhysicalField s;
    s.m = n;
    for (auto& c : s.comp) c.assign(s.size(), 0.0);

    // Smooth indicator of the union of balls.
    const double fraction = std::pow(lam, d - 3.0);
    RealArray outside(s.size(), fraction < 1.0 ? 1.0 : 0.0);
    if (fraction < 1.0) {
        const auto count = static_cast<std::size_t>(std::ceil(std::pow(lam, d)));
        // Poisson-placed balls cover 1 - exp(-count V / L^3) of the box.
        const double covered = -std::log1p(-fraction);
        const double ball_volume = covered * grid.volume() / static_cast<double>(count);
        const double rho = std::cbrt(3.0 * ball_volume / (4.0 * std::numbers::pi));
        const double outer = kBumpOuterFactor * rho;
        const int reach = static_cast<int>(std::ceil(outer / h));
        const CutoffProfile cut;
        for (std::size_t b = 0; b < count; ++b) {
            const Vec3 centre{Grid::length * unit(rng), Grid::length * unit(rng),
                              Grid::length * unit(rng)};
            const int c0 = static_cast<int>(std::floor(centre[0] / h));
            const int c1 = static_cast<int>(std::floor(centre[1] / h));
            const int c2 = static_cast<int>(std::floor(centre[2] / h));
            for (int di = -reach; di <= reach + 1; ++di)
                for (int dj = -reach; dj <= reach + 1; ++dj)
                    for (int dl = -reach; dl <= reach + 1; ++dl) {
                        const double dx = (c0 + di) * h - centre[0];
                        const double dy = (c1 + dj) * h - centre[1];
                        const double dz = (c2 + dl) * h - centre[2];
                        const double r = std::sqrt(dx * dx + dy * dy + dz * dz);
                        if (r >= outer) continue;
                        const double bump = cut.chi(0.75 * r / rho);
                        const int i = ((c0 + di) % n + n) % n;
                        const int j = ((c1 + dj) % n + n) % n;
                        const int l = ((c2 + dl) % n + n) % n;
                        outside[(static_cast<std::size_t>(i) * n + j) * n + l] *= 1.0 - bump;
                    }
        }
    }

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int l = 0; l < n; ++l) {
                const std::size_t p = (static_cast<std::size_t>(i) * n + j) * n + l;
                const double phase = h * (k0[0] * i + k0[1] * j + k0[2] * l) + phase0;
                const double mask = 1.0 - outside[p];
                const double cs = std::cos(phase) * mask;
                const double sn = std::sin(phase) * mask;
                for (int c = 0; c < 3; ++c) s.comp[c][p] = e1[c] * cs + e2[c] * sn;
            }

    VelocityField u = from_physical(s, grid);
    // Band multiplier vanishing for |k| <= lambda_{q-1} and |k| >= 3/4 lambda_{q+2},
    // where every shell other than q-1, q, q+1 lives.
    const CutoffProfile cut;
    for_each_mode(grid, [&](std::size_t idx, int k1, int k2, int k3, double) {
        const double xi = std::sqrt(double(k1) * k1 + double(k2) * k2 + double(k3) * k3);
        const double m =
            cut.chi(xi / (0.75 * lambda(q + 2))) - cut.chi(0.75 * xi / lambda(q - 1));
        for (int c = 0; c < 3; ++c) u.component(c)[idx] *= m;
    });
    u = dealias(std::move(u));
    enforce_hermitian(u);
    u = leray_project(std::move(u));
    u.time = 0.0;
    return u;
}

}  // namespace onsager
