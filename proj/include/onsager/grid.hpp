#pragma once

#include <cstddef>
#include <numbers>

namespace onsager {

/// Uniform periodic grid on the torus [0, 2pi)^3 with n points per axis.
///
/// Spectral data is kept in the half-complex layout of a real 3D FFT:
/// indices (i, j, l) with i, j in [0, n) and l in [0, n/2]. The integer
/// wavenumber of an index along the first two axes is i for i < n/2 and
/// i - n otherwise; along the last axis it is l itself.
struct Grid {
    int n = 0;
    int kmax = 0;  ///< 2/3-rule dealiasing cutoff, floor(n/3)

    static constexpr double length = 2.0 * std::numbers::pi;

    int half() const { return n / 2 + 1; }
    std::size_t spectral_size() const {
        return static_cast<std::size_t>(n) * n * half();
    }
    std::size_t physical_size() const {
        return static_cast<std::size_t>(n) * n * n;
    }
    std::size_t spectral_index(int i, int j, int l) const {
        return (static_cast<std::size_t>(i) * n + j) * half() + l;
    }
    int wavenumber(int i) const { return i < n / 2 ? i : i - n; }
    int index_of(int k) const { return k >= 0 ? k : k + n; }

    /// Smallest even sampling size m >= n for which products of two
    /// dealiased fields are computed without aliasing into |k|_inf <= kmax.
    int product_size() const {
        int m = n;
        while (m - 2 * kmax <= kmax) m += 2;
        return m;
    }

    double volume() const { return length * length * length; }

    friend bool operator==(const Grid&, const Grid&) = default;
};

/// Validates n (even, >= 8) and sets kmax = floor(n/3).
Grid make_grid(int n);

/// Iterates the stored half spectrum. The callback receives the flat index,
/// the wavenumber (k1, k2, k3) and the multiplicity of the mode in full-cube
/// sums (1 on the self-conjugate planes k3 = 0 and k3 = n/2, else 2).
template <class F>
void for_each_mode(const Grid& g, F&& f) {
    const int h = g.half();
    for (int i = 0; i < g.n; ++i) {
        const int k1 = g.wavenumber(i);
        for (int j = 0; j < g.n; ++j) {
            const int k2 = g.wavenumber(j);
            std::size_t idx = g.spectral_index(i, j, 0);
            for (int l = 0; l < h; ++l, ++idx) {
                const double weight = (l == 0 || 2 * l == g.n) ? 1.0 : 2.0;
                f(idx, k1, k2, l, weight);
            }
        }
    }
}

}  // namespace onsager
