#include "onsager/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "onsager/error.hpp"

namespace onsager {

PhysicalField to_physical(const VelocityField& u, int m) {
    const Grid& g = u.grid();
    if (m == 0) m = g.n;
    require(m >= g.n && m % 2 == 0, "sampling size must be even and >= grid size");
    const RealFft3& fft = RealFft3::get(m);
    const int mh = m / 2 + 1;
    PhysicalField out;
    out.m = m;
    SpectralArray buf;
    for (int c = 0; c < 3; ++c) {
        const SpectralArray& src = u.component(c);
        if (m == g.n) {
            buf.assign(src.begin(), src.end());
        } else {
            buf.assign(static_cast<std::size_t>(m) * m * mh, Complex{});
            for_each_mode(g, [&](std::size_t idx, int k1, int k2, int k3, double) {
                const int i = k1 >= 0 ? k1 : k1 + m;
                const int j = k2 >= 0 ? k2 : k2 + m;
                buf[(static_cast<std::size_t>(i) * m + j) * mh + k3] = src[idx];
            });
        }
        fft.backward(buf, out.comp[c]);
    }
    return out;
}

VelocityField from_physical(const PhysicalField& samples, const Grid& grid) {
    const int m = samples.m;
    require(m >= grid.n, "sampling grid coarser than target grid");
    for (const auto& c : samples.comp)
        require(c.size() == samples.size(), "sample array size does not match m^3");
    const RealFft3& fft = RealFft3::get(m);
    const int mh = m / 2 + 1;
    const double scale = 1.0 / (static_cast<double>(m) * m * m);
    VelocityField u(grid);
    RealArray in;
    SpectralArray spec;
    for (int c = 0; c < 3; ++c) {
        in.assign(samples.comp[c].begin(), samples.comp[c].end());
        fft.forward(in, spec);
        auto& dst = u.component(c);
        for_each_mode(grid, [&](std::size_t idx, int k1, int k2, int k3, double) {
            const int i = k1 >= 0 ? k1 : k1 + m;
            const int j = k2 >= 0 ? k2 : k2 + m;
            dst[idx] = spec[(static_cast<std::size_t>(i) * m + j) * mh + k3] * scale;
        });
    }
    return u;
}

VelocityField leray_project(VelocityField u) {
    auto& a = u.component(0);
    auto& b = u.component(1);
    auto& c = u.component(2);
    for_each_mode(u.grid(), [&](std::size_t idx, int k1, int k2, int k3, double) {
        const double k2sum = double(k1) * k1 + double(k2) * k2 + double(k3) * k3;
        if (k2sum == 0.0) return;
        const Complex dot = double(k1) * a[idx] + double(k2) * b[idx] + double(k3) * c[idx];
        const Complex s = dot / k2sum;
        a[idx] -= double(k1) * s;
        b[idx] -= double(k2) * s;
        c[idx] -= double(k3) * s;
    });
    return u;
}

VelocityField dealias(VelocityField u) {
    const int kmax = u.grid().kmax;
    for_each_mode(u.grid(), [&](std::size_t idx, int k1, int k2, int k3, double) {
        if (std::abs(k1) > kmax || std::abs(k2) > kmax || k3 > kmax)
            for (int c = 0; c < 3; ++c) u.component(c)[idx] = Complex{};
    });
    return u;
}

bool is_dealiased(const VelocityField& u) {
    const int kmax = u.grid().kmax;
    bool ok = true;
    for_each_mode(u.grid(), [&](std::size_t idx, int k1, int k2, int k3, double) {
        if (std::abs(k1) > kmax || std::abs(k2) > kmax || k3 > kmax)
            for (int c = 0; c < 3; ++c)
                if (u.component(c)[idx] != Complex{}) ok = false;
    });
    return ok;
}

namespace {
template <class F>
void for_each_conjugate_pair(const Grid& g, F&& f) {
    const int n = g.n;
    for (int l : {0, n / 2}) {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                const int mi = (n - i) % n;
                const int mj = (n - j) % n;
                f(g.spectral_index(i, j, l), g.spectral_index(mi, mj, l));
            }
        }
    }
}
}  // namespace

void enforce_hermitian(VelocityField& u) {
    for (int c = 0; c < 3; ++c) {
        auto& a = u.component(c);
        for_each_conjugate_pair(u.grid(), [&](std::size_t p, std::size_t q) {
            if (p > q) return;
            const Complex avg = 0.5 * (a[p] + std::conj(a[q]));
            a[p] = avg;
            a[q] = std::conj(avg);
        });
    }
}

double hermitian_residual(const VelocityField& u) {
    double worst = 0.0;
    for (int c = 0; c < 3; ++c) {
        const auto& a = u.component(c);
        for_each_conjugate_pair(u.grid(), [&](std::size_t p, std::size_t q) {
            worst = std::max(worst, std::abs(a[p] - std::conj(a[q])));
        });
    }
    return worst;
}

double divergence_residual(const VelocityField& u) {
    double worst = 0.0;
    const auto& a = u.component(0);
    const auto& b = u.component(1);
    const auto& c = u.component(2);
    for_each_mode(u.grid(), [&](std::size_t idx, int k1, int k2, int k3, double) {
        const double mag = std::sqrt(std::norm(a[idx]) + std::norm(b[idx]) + std::norm(c[idx]));
        if (mag == 0.0) return;
        const Complex dot = double(k1) * a[idx] + double(k2) * b[idx] + double(k3) * c[idx];
        worst = std::max(worst, std::abs(dot) / mag);
    });
    return worst;
}

double lp_norm(const PhysicalField& s, double p) {
    require(p >= 1.0, "L^p exponent must be >= 1");
    const std::size_t npts = s.size();
    double peak = 0.0;
    for (std::size_t i = 0; i < npts; ++i) {
        const double mag = std::sqrt(s.comp[0][i] * s.comp[0][i] + s.comp[1][i] * s.comp[1][i] +
                                     s.comp[2][i] * s.comp[2][i]);
        peak = std::max(peak, mag);
    }
    if (std::isinf(p) || peak == 0.0) return peak;
    const double h = Grid::length / s.m;
    double sum = 0.0;
    for (std::size_t i = 0; i < npts; ++i) {
        const double mag = std::sqrt(s.comp[0][i] * s.comp[0][i] + s.comp[1][i] * s.comp[1][i] +
                                     s.comp[2][i] * s.comp[2][i]);
        sum += std::pow(mag / peak, p);
    }
    return peak * std::pow(sum * h * h * h, 1.0 / p);
}

double lp_norm(const VelocityField& u, double p) {
    require(p >= 1.0, "L^p exponent must be >= 1");
    return lp_norm(to_physical(u), p);
}

double energy(const VelocityField& u) {
    double sum = 0.0;
    for_each_mode(u.grid(), [&](std::size_t idx, int, int, int, double w) {
        for (int c = 0; c < 3; ++c) sum += w * std::norm(u.component(c)[idx]);
    });
    return u.grid().volume() * sum;
}

double gradient_energy(const VelocityField& u) {
    double sum = 0.0;
    for_each_mode(u.grid(), [&](std::size_t idx, int k1, int k2, int k3, double w) {
        const double k2sum = double(k1) * k1 + double(k2) * k2 + double(k3) * k3;
        for (int c = 0; c < 3; ++c) sum += w * k2sum * std::norm(u.component(c)[idx]);
    });
    return u.grid().volume() * sum;
}

double max_coeff_diff(const VelocityField& a, const VelocityField& b) {
    require(a.grid() == b.grid(), "grid mismatch");
    double worst = 0.0;
    for (int c = 0; c < 3; ++c)
        for (std::size_t i = 0; i < a.component(c).size(); ++i)
            worst = std::max(worst, std::abs(a.component(c)[i] - b.component(c)[i]));
    return worst;
}

}  // namespace onsager
