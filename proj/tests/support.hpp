#pragma once

// Independent oracles shared by the test programs. Nothing here goes
// through FFTW.

#include <array>
#include <cmath>
#include <complex>
#include <random>
#include <utility>
#include <vector>

#include "onsager/field.hpp"
#include "onsager/generators.hpp"

namespace onsager::test {

struct Mode {
    int k[3];
    Complex u[3];
};

/// Every nonzero coefficient of the full cube (both k and -k).
inline std::vector<Mode> nonzero_modes(const VelocityField& u) {
    const int h = u.grid().n / 2;
    std::vector<Mode> out;
    for (int a = -h; a < h; ++a)
        for (int b = -h; b < h; ++b)
            for (int c = -h; c < h; ++c) {
                Mode m{{a, b, c}, {}};
                bool any = false;
                for (int i = 0; i < 3; ++i) {
                    m.u[i] = u.coeff(i, a, b, c);
                    any = any || m.u[i] != Complex(0.0);
                }
                if (any) out.push_back(m);
            }
    return out;
}

/// u(x) by direct summation of the Fourier series.
inline std::array<double, 3> evaluate(const std::vector<Mode>& modes, const double x[3]) {
    std::array<double, 3> v{0, 0, 0};
    for (const auto& m : modes) {
        const double ph = m.k[0] * x[0] + m.k[1] * x[1] + m.k[2] * x[2];
        const Complex e(std::cos(ph), std::sin(ph));
        for (int i = 0; i < 3; ++i) v[i] += (m.u[i] * e).real();
    }
    return v;
}

/// Per output wavevector k, the triple sum
///   V sum_{p + r = k} Re[ u_i(p) u_l(r) conj(i k_l u_i(k)) ]
/// paired with |k|. O(N^2) in the number of modes.
inline std::vector<std::pair<double, double>> triad_transfer(const VelocityField& u) {
    const auto modes = nonzero_modes(u);
    const int h = u.grid().n / 2;
    const int n = 2 * h;
    std::vector<const Mode*> table(static_cast<std::size_t>(n) * n * n, nullptr);
    auto slot = [&](int a, int b, int c) {
        return (static_cast<std::size_t>(a + h) * n + (b + h)) * n + (c + h);
    };
    for (const auto& md : modes) table[slot(md.k[0], md.k[1], md.k[2])] = &md;
    auto find = [&](int a, int b, int c) -> const Mode* {
        if (a < -h || a >= h || b < -h || b >= h || c < -h || c >= h) return nullptr;
        return table[slot(a, b, c)];
    };
    const double volume = std::pow(2.0 * M_PI, 3);
    std::vector<std::pair<double, double>> out;
    for (const auto& kk : modes) {
        const double xi = std::sqrt(double(kk.k[0] * kk.k[0] + kk.k[1] * kk.k[1] + kk.k[2] * kk.k[2]));
        double total = 0.0;
        for (const auto& p : modes) {
            const Mode* rm = find(kk.k[0] - p.k[0], kk.k[1] - p.k[1], kk.k[2] - p.k[2]);
            if (rm == nullptr) continue;
            for (int i = 0; i < 3; ++i)
                for (int l = 0; l < 3; ++l) {
                    const Complex grad = Complex(0.0, kk.k[l]) * kk.u[i];
                    total += (p.u[i] * rm->u[l] * std::conj(grad)).real();
                }
        }
        out.emplace_back(xi, volume * total);
    }
    return out;
}

/// Pi_{<=q} from a transfer table and the low-pass multiplier m, which
/// enters squared (once on the product, once on the gradient).
template <class Multiplier>
double triad_flux(const std::vector<std::pair<double, double>>& transfer, Multiplier&& m) {
    double total = 0.0;
    for (const auto& [xi, t] : transfer) {
        const double w = m(xi);
        total += w * w * t;
    }
    return total;
}

template <class Multiplier>
double triad_flux(const VelocityField& u, Multiplier&& m) {
    return triad_flux(triad_transfer(u), m);
}

/// Exact decaying shear solution (0, sqrt2 e^{-9 nu t} cos 3x1, 0) sampled at
/// intervals + 1 equally spaced times in [0, T].
inline Trajectory shear_trajectory(const Grid& g, double nu, double T, int intervals) {
    std::vector<VelocityField> snaps;
    for (int i = 0; i <= intervals; ++i) {
        const double t = T * i / intervals;
        VelocityField u = shear_mode(g, 3, std::sqrt(2.0) * std::exp(-9.0 * nu * t));
        u.time = t;
        snaps.push_back(u);
    }
    return Trajectory(nu, snaps);
}

inline Trajectory zero_trajectory(const Grid& g, double nu, double T, int intervals) {
    std::vector<VelocityField> snaps;
    for (int i = 0; i <= intervals; ++i) {
        VelocityField u(g);
        u.time = T * i / intervals;
        snaps.push_back(u);
    }
    return Trajectory(nu, snaps);
}

inline double max_abs(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

}  // namespace onsager::test
