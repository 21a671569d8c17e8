// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 irs-netgeo contributors

#include "netgeo/interference.hpp"

#include <cmath>

#include "netgeo/errors.hpp"

namespace netgeo {
namespace {

double exponent_factor(double s, double dist, double lambda_eff, double eta, double l0,
                       const EvalTolerance& tol) {
  if (s == 0.0) return 0.0;
  const double dpl = 2.0 / eta;
  const double z = s * std::pow(l0, eta) * std::pow(dist, -eta);
  const double f = hyp2f1_negarg(1.0, 1.0 - dpl, 2.0 - dpl, z, tol);
  return -2.0 * M_PI * lambda_eff * s * std::pow(l0, eta) /
         ((eta - 2.0) * std::pow(dist, eta - 2.0)) * f;
}

}  // namespace

double InterferenceLT::lt_given_Rd(double s, double Rd, const EvalTolerance& tol) const {
  if (s < 0.0 || Rd <= 0.0) throw DomainError("lt_given_Rd: need s >= 0, Rd > 0");
  if (s == 0.0) return 1.0;
  const double dominant = 1.0 / (1.0 + s * std::pow(l0, eta) * std::pow(Rd, -eta));
  return std::exp(exponent_factor(s, Rd, lambda, eta, l0, tol)) * dominant;
}

double InterferenceLT::lt_given_R0(double s, double R0, double lambda_eff,
                                   const EvalTolerance& tol) const {
  if (s < 0.0 || R0 <= 0.0) throw DomainError("lt_given_R0: need s >= 0, R0 > 0");
  if (s == 0.0) return 1.0;
  return std::exp(exponent_factor(s, R0, lambda_eff, eta, l0, tol));
}

}  // namespace netgeo
