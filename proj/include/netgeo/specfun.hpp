// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 irs-netgeo contributors
//
// Special functions needed by the analytic SIR machinery: Pochhammer symbol,
// the Gauss hypergeometric function 2F1(a, b; b+1; -x) at nonpositive
// argument, and the regularized lower incomplete gamma function.

#pragma once

namespace netgeo {

struct EvalTolerance {
  double rel_tol = 1e-12;
  int max_terms = 10000;  // evaluation budget unit (one "term" ~ one 15-point rule)
};

// Rising factorial (a)_n = a (a+1) ... (a+n-1); (a)_0 = 1.
double pochhammer(double a, unsigned n);

// Thread-safe log-gamma (does not touch the signgam global).
double lgamma_ts(double x);

// 2F1(a, b; c; -x) for the contiguous family c = b + 1 with x >= 0 and
// b > -1. This is the only family the interference and Toeplitz formulas
// need. Evaluated through the Euler integral
//     2F1(a, b; b+1; -x) = b * Int_0^1 t^(b-1) (1+x t)^(-a) dt     (b > 0)
// by adaptive Gauss-Kronrod quadrature; for 0 < b <= 1 the substitution
// u = t^b removes the endpoint singularity, and for -1 < b < 0 integration
// by parts continues the representation:
//     2F1(a, b; b+1; -x) = (1+x)^(-a)
//                        + (a x/(b+1)) * Int_0^1 (1+x u^(1/(b+1)))^(-a-1) du.
// Throws NonConvergence if the quadrature cannot reach rel_tol in budget,
// DomainError if (a, b, c, x) is outside the supported family.
double hyp2f1_negarg(double a, double b, double c, double x,
                     const EvalTolerance& tol = {});

// log of 2F1(a, b; b+1; -x) for b >= 0, x >= 0 (value is positive there).
// Internally rescales the integrand so extreme parameters (large b with
// large x) neither overflow nor underflow; used by the Toeplitz c_k
// coefficients where the plain value can leave double range while the final
// product stays representable.
double hyp2f1_negarg_ln(double a, double b, double x,
                        const EvalTolerance& tol = {});

// Regularized lower incomplete gamma P(s, x) = gamma(s, x)/Gamma(s) in [0, 1].
// Series for x < s+1, Lentz continued fraction otherwise.
double reg_lower_inc_gamma(double s, double x);

}  // namespace netgeo
