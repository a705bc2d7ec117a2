#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "onsager/field.hpp"

namespace onsager {

/// Initial conditions known to the solver.
enum class InitialCondition { TaylorGreen, Shear, Random };

InitialCondition parse_initial_condition(const std::string& name);
std::string to_string(InitialCondition ic);

struct SolverConfig {
    Grid grid = make_grid(64);
    double nu = 0.1;
    double dt = 1e-3;
    double t_end = 1.0;
    int stride = 1;  ///< steps between snapshots
    InitialCondition init = InitialCondition::TaylorGreen;
    std::uint64_t seed = 0;  ///< used by InitialCondition::Random
};

/// Throws PreconditionError on an invalid configuration.
void validate(const SolverConfig& cfg);

VelocityField initial_field(const SolverConfig& cfg);

/// -P div(u (x) u), dealiased.
VelocityField nonlinear_term(const VelocityField& u);

/// One integrating-factor RK4 step of du/dt = -P div(u (x) u) + nu Lap u.
/// Throws NumericalError if the result is not finite.
VelocityField step(const VelocityField& u, double nu, double dt);

struct SimulationStats {
    long steps = 0;
    long snapshots = 0;
    long cfl_warnings = 0;  ///< steps with dt kmax max|u| > 0.5
    double max_cfl = 0.0;
};

using SnapshotObserver = std::function<void(const VelocityField&)>;

/// Integrates from t = 0 to t_end and hands every stride-th state (and the
/// first and last) to `observe`.
SimulationStats simulate(const SolverConfig& cfg, const SnapshotObserver& observe);

Trajectory simulate(const SolverConfig& cfg);

}  // namespace onsager
