#include "onsager/solver.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>

#include "onsager/error.hpp"
#include "onsager/flux.hpp"
#include "onsager/generators.hpp"
#include "onsager/spectral.hpp"

namespace onsager {

InitialCondition parse_initial_condition(const std::string& name) {
    if (name == "taylor-green") return InitialCondition::TaylorGreen;
    if (name == "shear") return InitialCondition::Shear;
    if (name == "random") return InitialCondition::Random;
    throw PreconditionError("unknown initial condition: " + name);
}

std::string to_string(InitialCondition ic) {
    switch (ic) {
        case InitialCondition::TaylorGreen: return "taylor-green";
        case InitialCondition::Shear: return "shear";
        case InitialCondition::Random: return "random";
    }
    return "unknown";
}

void validate(const SolverConfig& cfg) {
    require(cfg.grid.n >= 8 && cfg.grid.n % 2 == 0, "grid size must be even and >= 8");
    require(cfg.nu > 0.0, "viscosity must be positive");
    require(cfg.dt > 0.0 && std::isfinite(cfg.dt), "time step must be positive");
    require(cfg.t_end > 0.0 && std::isfinite(cfg.t_end), "end time must be positive");
    require(cfg.stride >= 1, "snapshot stride must be >= 1");
    const double steps = std::round(cfg.t_end / cfg.dt);
    require(steps >= 1 && std::abs(steps * cfg.dt - cfg.t_end) <= 1e-9 * cfg.t_end,
            "end time must be a whole number of steps");
}

VelocityField initial_field(const SolverConfig& cfg) {
    switch (cfg.init) {
        case InitialCondition::TaylorGreen: return taylor_green(cfg.grid);
        case InitialCondition::Shear: return shear_mode(cfg.grid, 3, std::sqrt(2.0));
        case InitialCondition::Random:
            return random_divfree(cfg.grid, band_profile(1, 4, 1.0), cfg.seed);
    }
    throw PreconditionError("unknown initial condition");
}

namespace {

VelocityField project_divergence(const VelocityField& u, const ProductSpectrum& uu) {
    const Grid& g = u.grid();
    VelocityField out(g);
    for_each_mode(g, [&](std::size_t idx, int k1, int k2, int k3, double) {
        if (std::max({std::abs(k1), std::abs(k2), std::abs(k3)}) > g.kmax) return;
        const double k[3] = {double(k1), double(k2), double(k3)};
        const double kk = k[0] * k[0] + k[1] * k[1] + k[2] * k[2];
        if (kk == 0.0) return;
        Complex d[3];
        for (int j = 0; j < 3; ++j) {
            Complex s = 0.0;
            for (int l = 0; l < 3; ++l) s += k[l] * uu.at(j, l)[idx];
            d[j] = Complex(0.0, -1.0) * s;
        }
        const Complex kd = (k[0] * d[0] + k[1] * d[1] + k[2] * d[2]) / kk;
        for (int j = 0; j < 3; ++j) out.component(j)[idx] = d[j] - k[j] * kd;
    });
    enforce_hermitian(out);
    return out;
}

void apply_decay(VelocityField& u, double nu, double h) {
    for_each_mode(u.grid(), [&](std::size_t idx, int k1, int k2, int k3, double) {
        const double f = std::exp(-nu * double(k1 * k1 + k2 * k2 + k3 * k3) * h);
        for (int c = 0; c < 3; ++c) u.component(c)[idx] *= f;
    });
}

VelocityField decayed(VelocityField u, double nu, double h) {
    apply_decay(u, nu, h);
    return u;
}

void check_finite(const VelocityField& u) {
    for (int c = 0; c < 3; ++c)
        for (const Complex& z : u.component(c))
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
                throw NumericalError("solver produced a non-finite coefficient");
}

}  // namespace

VelocityField nonlinear_term(const VelocityField& u) {
    return project_divergence(u, product_spectrum(u));
}

VelocityField step(const VelocityField& u, double nu, double dt) {
    require(nu > 0.0 && dt > 0.0, "step needs positive viscosity and time step");
    const VelocityField k1 = nonlinear_term(u);
    const VelocityField half_u = decayed(u, nu, 0.5 * dt);
    const VelocityField k2 = nonlinear_term(decayed(u + (0.5 * dt) * k1, nu, 0.5 * dt));
    const VelocityField k3 = nonlinear_term(half_u + (0.5 * dt) * k2);
    const VelocityField full_u = decayed(u, nu, dt);
    const VelocityField k4 = nonlinear_term(full_u + dt * decayed(k3, nu, 0.5 * dt));
    VelocityField incr = decayed(k1, nu, dt);
    incr += 2.0 * decayed(k2 + k3, nu, 0.5 * dt);
    incr += k4;
    VelocityField next = full_u + (dt / 6.0) * incr;
    check_finite(next);
    if (u.time) next.time = *u.time + dt;
    return next;
}

SimulationStats simulate(const SolverConfig& cfg, const SnapshotObserver& observe) {
    validate(cfg);
    const long steps = std::lround(cfg.t_end / cfg.dt);
    SimulationStats stats;
    VelocityField u = initial_field(cfg);
    u.time = 0.0;
    observe(u);
    ++stats.snapshots;
    for (long i = 1; i <= steps; ++i) {
        const double cfl = cfg.dt * cfg.grid.kmax * lp_norm(u, INFINITY);
        stats.max_cfl = std::max(stats.max_cfl, cfl);
        if (cfl > 0.5) {
            if (stats.cfl_warnings == 0)
                std::cerr << "warning: CFL number " << cfl << " exceeds 0.5 at t = " << *u.time
                          << "\n";
            ++stats.cfl_warnings;
        }
        u = step(u, cfg.nu, cfg.dt);
        u.time = static_cast<double>(i) * cfg.dt;
        ++stats.steps;
        if (i % cfg.stride == 0 || i == steps) {
            observe(u);
            ++stats.snapshots;
        }
    }
    return stats;
}

Trajectory simulate(const SolverConfig& cfg) {
    std::vector<VelocityField> snaps;
    simulate(cfg, [&](const VelocityField& u) { snaps.push_back(u); });
    return Trajectory(cfg.nu, std::move(snaps));
}

}  // namespace onsager
