// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 irs-netgeo contributors
//
// Adaptive Gauss-Kronrod quadrature on a finite interval.

#pragma once

#include <functional>

namespace netgeo {

struct QuadOptions {
  double rel_tol = 1e-12;
  double abs_tol = 0.0;       // absolute floor; 0 means purely relative
  int max_depth = 52;         // bisection depth limit per branch
  long max_evals = 2000000;   // total integrand evaluations budget
};

struct QuadResult {
  double value = 0.0;
  double abs_error = 0.0;     // error estimate (sum of |K15-G7| over accepted intervals)
  long evals = 0;
};

// Integrates f over [a, b] (a < b or a > b; the sign convention is the usual
// oriented integral) by adaptive bisection with a Gauss 7 / Kronrod 15 pair.
// The local acceptance test is |K15-G7| <= max(abs_tol_local, rel_tol*|K15|),
// with the absolute tolerance split across bisections, which is conservative
// for the positive integrands used throughout this library.
// Throws NonConvergence when the budget is exhausted before acceptance.
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     const QuadOptions& opt = {});

}  // namespace netgeo
