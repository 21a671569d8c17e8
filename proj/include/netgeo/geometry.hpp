// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 irs-netgeo contributors
//
// IRS placement geometry and the triangle parameter Delta = (R0 l0/(R1 R2))^eta.
//
// Model I places the IRS at fixed distance r2 from the user in a uniformly
// random direction; R1 then follows an arcsine-type conditional law and Delta
// has a closed-form CDF obtained by mixing over the serving distance. Model II
// places the IRS equidistant from base station and user at R1 = R2 = sqrt(R0)/c,
// which makes Delta deterministic.

#pragma once

#include <variant>

namespace netgeo {

struct TriangleGeometry {
  double R0 = 0.0;     // serving BS - UE distance (m)
  double R1 = 0.0;     // serving BS - IRS distance (m)
  double R2 = 0.0;     // IRS - UE distance (m)
  double delta = 0.0;  // triangle parameter (dimensionless)
};

struct ModelI {
  double r2;  // IRS-UE distance (m)
};
struct ModelII {};
struct FixedDelta {
  double delta;
};
struct NoIrs {};

using PlacementModel = std::variant<ModelI, ModelII, FixedDelta, NoIrs>;

// (R0 l0/(R1 R2))^eta. Both R1, R2 infinite encodes the no-IRS convention and
// returns 0; exactly one infinite is a DomainError.
double triangle_delta(double R0, double R1, double R2, double eta, double l0);

// Law of cosines for the BS-IRS distance in Model I; phi is the angle at the
// UE between the UE->BS and UE->IRS directions.
double model1_R1(double R0, double r2, double phi);

// P(R1 <= x | R0) for Model I: 1/2 - asin((R0^2 + r2^2 - x^2)/(2 R0 r2))/pi,
// clamped to 0 below the support |R0 - r2| and to 1 above R0 + r2.
double model1_cdf_R1_given_R0(double x, double R0, double r2);

// Unconditional CDF of Delta for Model I, mixing the conditional R1 law over
// the R0 density (correction factor q). The asin argument is clamped to
// [-1, 1], which is exactly the conditional probability saturating at 0/1
// outside the Proposition's support. Throws NonConvergence.
double model1_cdf_delta(double x, double lambda, double q, double r2, double l0, double eta);

// Quantile of the Model I Delta distribution by bisection on model1_cdf_delta.
double model1_delta_quantile(double p, double lambda, double q, double r2, double l0,
                             double eta);

// Deterministic Model II triangle parameter (8 sqrt(q lambda) l0 / 3)^eta.
double model2_delta(double lambda, double q, double l0, double eta);

// Full Model II geometry for a drawn R0. Throws GeometryInfeasible when the
// triangle cannot close (R0 >= 4/c^2; probability < 0.1% at the paper's
// parameters, callers resample).
TriangleGeometry model2_geometry(double R0, double lambda, double q, double l0, double eta);

}  // namespace netgeo
