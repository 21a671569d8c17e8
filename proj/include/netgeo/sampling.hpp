// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 irs-netgeo contributors
//
// Point-process and link-distance samplers: Nakagami fading amplitudes,
// Poisson point process realizations on a disk, the typical-cell serving
// distance R0 (Rayleigh-type density with clustering correction q), and the
// dominant-interferer distance Rd conditioned on R0.

#pragma once

#include <vector>

#include "netgeo/rng.hpp"

namespace netgeo {

struct Point2D {
  double x = 0.0;
  double y = 0.0;
};

struct PointSet2D {
  std::vector<Point2D> points;
};

// Nakagami(mu, omega) amplitude: square is gamma(mu, omega/mu), E[g^2] = omega.
// mu = 1 reduces to a Rayleigh amplitude (exponential power).
double sample_nakagami(double mu, double omega, RngStream& rng);

// Homogeneous PPP of density lambda (per m^2) on a disk: Poisson count,
// positions i.i.d. uniform.
PointSet2D sample_ppp_disk(double lambda, double radius, Point2D center, RngStream& rng);

// Serving distance of the typical-cell user: density 2 pi q lambda x
// exp(-pi q lambda x^2), sampled by inverse CDF.
double sample_R0(double lambda, double q, RngStream& rng);

// Dominant-interferer distance given R0: density 2 pi lambda q r
// exp(-pi lambda q (r^2 - R0^2)) on r >= R0, sampled by inverse CDF.
double sample_Rd_given_R0(double R0, double lambda, double q, RngStream& rng);

}  // namespace netgeo
