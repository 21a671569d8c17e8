// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 irs-netgeo contributors

#include "netgeo/sampling.hpp"

#include <cmath>

#include "netgeo/errors.hpp"

namespace netgeo {

double sample_nakagami(double mu, double omega, RngStream& rng) {
  if (mu < 0.5) throw DomainError("sample_nakagami: mu must be >= 0.5");
  // mu = 1 is Rayleigh: exponential power, no gamma rejection loop needed.
  if (mu == 1.0) return std::sqrt(omega * rng.exponential());
  return std::sqrt(rng.gamma(mu, omega / mu));
}

PointSet2D sample_ppp_disk(double lambda, double radius, Point2D center, RngStream& rng) {
  PointSet2D set;
  if (radius <= 0.0) return set;
  const double area = M_PI * radius * radius;
  const long n = rng.poisson(lambda * area);
  set.points.reserve(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) {
    const double r = radius * std::sqrt(rng.uniform());
    const double ang = 2.0 * M_PI * rng.uniform();
    set.points.push_back({center.x + r * std::cos(ang), center.y + r * std::sin(ang)});
  }
  return set;
}

double sample_R0(double lambda, double q, RngStream& rng) {
  return std::sqrt(rng.exponential() / (M_PI * q * lambda));
}

double sample_Rd_given_R0(double R0, double lambda, double q, RngStream& rng) {
  return std::sqrt(R0 * R0 + rng.exponential() / (M_PI * q * lambda));
}

}  // namespace netgeo
