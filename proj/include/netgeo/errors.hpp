// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 irs-netgeo contributors
//
// Error taxonomy. Every throwing operation in the library uses one of these
// types so the CLI can map failures to distinct, machine-readable exit codes.

#pragma once

#include <stdexcept>
#include <string>

namespace netgeo {

// A numerical routine (quadrature, series, continued fraction) failed to meet
// its tolerance within the evaluation budget.
class NonConvergence : public std::runtime_error {
 public:
  explicit NonConvergence(const std::string& msg) : std::runtime_error(msg) {}
};

// Arguments outside the mathematical domain of an operation
// (e.g. exactly one of R1, R2 infinite in the triangle parameter).
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Model II cannot close the BS-IRS-UE triangle for the drawn R0 (R0 >= 4/c^2).
class GeometryInfeasible : public std::runtime_error {
 public:
  explicit GeometryInfeasible(const std::string& msg) : std::runtime_error(msg) {}
};

// Toeplitz system with c_0 = 0; cannot occur for theta >= 0 but kept as a
// defensive error rather than undefined behavior.
class SingularMatrix : public std::runtime_error {
 public:
  explicit SingularMatrix(const std::string& msg) : std::runtime_error(msg) {}
};

// Not enough deep-tail samples to resolve the requested CDF depth.
// Carries the depth (log10 of the empirical CDF) that was achievable.
class InsufficientTailMass : public std::runtime_error {
 public:
  InsufficientTailMass(const std::string& msg, double achieved_depth_log10)
      : std::runtime_error(msg), achieved_depth_log10(achieved_depth_log10) {}
  double achieved_depth_log10;
};

// Voronoi-cell rejection sampler exhausted its candidate budget.
class RejectionBudgetExceeded : public std::runtime_error {
 public:
  explicit RejectionBudgetExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

// Simulation window too small for the requested truncation-bias tolerance.
class WindowTooSmall : public std::runtime_error {
 public:
  explicit WindowTooSmall(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid or inconsistent user-facing configuration.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace netgeo
