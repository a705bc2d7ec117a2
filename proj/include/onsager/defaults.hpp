#pragma once

namespace onsager::defaults {

inline constexpr const char* kVersion = "0.1.0";

/// Empirical Bernstein constant: ||u_q||_r <= C lambda_q^{3(1/s-1/r)} ||u_q||_s.
inline constexpr double kBernsteinBound = 8.0;

/// Largest |Pi_{<=q}| / flux_estimate_rhs over the reference ensemble
/// (200 random fields, n = 32, all q); measured 0.0332.
inline constexpr double kFluxEstimateConstant = 0.034;

inline constexpr double kCflLimit = 0.5;
inline constexpr double kBalanceTolerance = 1e-6;
inline constexpr double kDivergenceTolerance = 1e-12;

// Reference run.
inline constexpr int kGridSize = 64;
inline constexpr double kViscosity = 0.1;
inline constexpr double kTimeStep = 1e-3;
inline constexpr double kEndTime = 1.0;
inline constexpr int kSnapshotStride = 100;

inline constexpr int kRegionGrid = 200;
inline constexpr int kCascadeShells = 40;
inline constexpr int kSlopeFitPoints = 10;

}  // namespace onsager::defaults
