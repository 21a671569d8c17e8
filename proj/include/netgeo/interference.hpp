// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 irs-netgeo contributors
//
// Laplace transforms of the intercell interference under Rayleigh-faded
// interferer links: conditioned on the dominant-interferer distance Rd
// (PPP of density lambda outside b(u, Rd) plus the explicit nearest
// interferer) and conditioned on R0 (plain exclusion-ball PPP, density
// lambda or q*lambda per caller).

#pragma once

#include "netgeo/specfun.hpp"

namespace netgeo {

struct InterferenceLT {
  double lambda;  // interferer density (per m^2)
  double eta;     // path-loss exponent, > 2
  double l0;      // reference distance (m)

  double delta_pl() const { return 2.0 / eta; }

  // exp(-2 pi lambda s l0^eta / ((eta-2) Rd^(eta-2))
  //       * 2F1(1, 1-delta; 2-delta; -s l0^eta / Rd^eta)) / (1 + s l0^eta Rd^-eta).
  double lt_given_Rd(double s, double Rd, const EvalTolerance& tol = {}) const;

  // Same exponential factor with Rd -> R0 and lambda -> lambda_eff; no
  // dominant-interferer factor.
  double lt_given_R0(double s, double R0, double lambda_eff,
                     const EvalTolerance& tol = {}) const;
};

}  // namespace netgeo
