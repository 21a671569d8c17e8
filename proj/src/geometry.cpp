// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 irs-netgeo contributors

#include "netgeo/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "netgeo/errors.hpp"
#include "netgeo/quad.hpp"

namespace netgeo {

double triangle_delta(double R0, double R1, double R2, double eta, double l0) {
  const bool inf1 = std::isinf(R1);
  const bool inf2 = std::isinf(R2);
  if (inf1 && inf2) return 0.0;
  if (inf1 != inf2) throw DomainError("triangle_delta: exactly one of R1, R2 is infinite");
  if (R0 <= 0.0 || R1 <= 0.0 || R2 <= 0.0)
    throw DomainError("triangle_delta: distances must be positive");
  return std::pow(R0 * l0 / (R1 * R2), eta);
}

double model1_R1(double R0, double r2, double phi) {
  return std::sqrt(R0 * R0 + r2 * r2 - 2.0 * r2 * R0 * std::cos(phi));
}

double model1_cdf_R1_given_R0(double x, double R0, double r2) {
  if (x <= std::fabs(R0 - r2)) return 0.0;
  if (x >= R0 + r2) return 1.0;
  const double arg = (R0 * R0 + r2 * r2 - x * x) / (2.0 * R0 * r2);
  return 0.5 - std::asin(std::clamp(arg, -1.0, 1.0)) / M_PI;
}

double model1_cdf_delta(double x, double lambda, double q, double r2, double l0, double eta) {
  if (x <= 0.0) return 0.0;
  const double piql = M_PI * lambda * q;
  // e^{-pi q lambda y^2} < 1e-14 beyond y_max: bounded truncation error.
  const double y_max = std::sqrt(14.0 * std::log(10.0) / piql);
  // x'^2 = y^2 l0^2 / (r2^2 x^{2/eta}) is the R1 threshold for Delta <= x.
  const double thr = l0 * l0 / (r2 * r2 * std::pow(x, 2.0 / eta));
  const auto integrand = [&](double y) {
    const double arg = (y * y * (1.0 - thr) + r2 * r2) / (2.0 * y * r2);
    return 2.0 * lambda * q * y * std::exp(-piql * y * y) *
           std::asin(std::clamp(arg, -1.0, 1.0));
  };
  QuadOptions opt;
  opt.rel_tol = 1e-10;
  opt.abs_tol = 1e-13;
  // The clamp kinks in at |arg| = 1, i.e. y = r2/(1 + sqrt(thr)) and
  // y = r2/|1 - sqrt(thr)|; splitting there keeps each piece smooth.
  const double rt = std::sqrt(thr);
  std::vector<double> cuts{0.0};
  const double c1 = r2 / (1.0 + rt);
  if (c1 > 0.0 && c1 < y_max) cuts.push_back(c1);
  if (rt != 1.0) {
    const double c2 = r2 / std::fabs(1.0 - rt);
    if (c2 > 0.0 && c2 < y_max) cuts.push_back(c2);
  }
  cuts.push_back(y_max);
  std::sort(cuts.begin(), cuts.end());
  double integral = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
    integral += integrate(integrand, cuts[i], cuts[i + 1], opt).value;
  return std::clamp(0.5 + integral, 0.0, 1.0);
}

double model1_delta_quantile(double p, double lambda, double q, double r2, double l0,
                             double eta) {
  if (p <= 0.0 || p >= 1.0) throw DomainError("model1_delta_quantile: p in (0,1) required");
  double hi = 1e-12;
  while (model1_cdf_delta(hi, lambda, q, r2, l0, eta) < p) {
    hi *= 10.0;
    if (hi > 1e30) throw NonConvergence("model1_delta_quantile: bracket expansion failed");
  }
  double lo = hi / 10.0;
  if (model1_cdf_delta(lo, lambda, q, r2, l0, eta) >= p) lo = 0.0;
  for (int i = 0; i < 200 && (hi - lo) > 1e-9 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (model1_cdf_delta(mid, lambda, q, r2, l0, eta) < p)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

double model2_delta(double lambda, double q, double l0, double eta) {
  return std::pow(8.0 * std::sqrt(q * lambda) * l0 / 3.0, eta);
}

TriangleGeometry model2_geometry(double R0, double lambda, double q, double l0, double eta) {
  if (R0 <= 0.0) throw DomainError("model2_geometry: R0 must be positive");
  const double mean_R0 = 1.0 / (2.0 * std::sqrt(q * lambda));
  const double c = 2.0 / std::sqrt(3.0 * mean_R0);
  if (R0 >= 4.0 / (c * c))
    throw GeometryInfeasible("model2_geometry: triangle cannot close for drawn R0");
  TriangleGeometry g;
  g.R0 = R0;
  g.R1 = g.R2 = std::sqrt(R0) / c;
  g.delta = model2_delta(lambda, q, l0, eta);
  return g;
}

}  // namespace netgeo
