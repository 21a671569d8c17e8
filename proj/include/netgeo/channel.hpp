// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 irs-netgeo contributors
//
// Effective channel power coefficient of the IRS-aided link.
//
// After optimal per-element phase alignment the combined direct+reflected
// channel amplitude is g0 + sqrt(Delta) * sum_i g_{i,1} g_{i,2} with all g
// i.i.d. Nakagami(mu, 1); its square is G-tilde, whose conditional mean given
// Delta has a closed form, and G = G-tilde / E[G-tilde | Delta] is the
// unit-mean coefficient the SIR analysis approximates with exponential /
// gamma / Erlang surrogates keyed on the N*Delta regime.

#pragma once

#include "netgeo/rng.hpp"

namespace netgeo {

enum class Zeta { Rayl, Nak };

struct FadingSpec {
  double mu = 1.0;     // Nakagami shape, >= 0.5
  double omega = 1.0;  // spread; fixed at 1 throughout
  Zeta zeta() const { return mu == 1.0 ? Zeta::Rayl : Zeta::Nak; }
};

enum class Chi { s, m, l };  // small / medium / large N*Delta regime

struct ApproxSpec {
  enum class Kind { Exponential, Gamma, Erlang };
  Kind kind = Kind::Exponential;
  double mbar = 1.0;  // gamma shape before rounding
  int M = 1;          // Erlang shape, round(mbar) clamped to >= 1
  Chi chi = Chi::s;
};

// First moment of a Nakagami(mu, 1) amplitude: Gamma(mu+1/2)/Gamma(mu) * sqrt(1/mu).
double mu_fad(double mu);

// E[G-tilde | Delta] = 1 + N (2 sqrt(Delta) mu_fad^3 + Delta (1 - mu_fad^4))
//                        + N^2 Delta mu_fad^4.
double mean_tilde_g(double n_elements, double delta, double mu);

// One draw of G-tilde (exact construction, 2N+1 fading variates).
double sample_tilde_g(int n_elements, double delta, const FadingSpec& fading, RngStream& rng);

// One draw of the unit-mean G.
double sample_g(int n_elements, double delta, const FadingSpec& fading, RngStream& rng);

// s if N*Delta <= 1e-4, l if N*Delta >= 1, m otherwise.
Chi classify_regime(double n_elements, double delta);

// Unit-mean surrogate distribution for G per regime table:
//   Rayl: s -> Exponential, m -> Erlang(round(N^0.25)), l -> Erlang(round(N^0.75))
//   Nak:  s -> Erlang(round(mu)), m -> Erlang(round(N^0.25 mu)), l -> Erlang(round(N^0.75 mu))
// With refined = true and chi = m the shape exponent interpolates in
// log10(N*Delta): mbar = N^(3/4 + log10(N*Delta)/4) * mu (n_delta required).
// round() is half-away-from-zero; M < 1 is clamped to 1 with a stderr warning.
ApproxSpec approx_spec(Chi chi, double n_elements, double mu, bool refined = false,
                       double n_delta = 0.0);

// Same parameters but keeps the unrounded gamma shape (for CDF comparison).
ApproxSpec approx_spec_gamma(Chi chi, double n_elements, double mu, bool refined = false,
                             double n_delta = 0.0);

// CDF of the surrogate at y >= 0. Exponential: 1 - e^-y; Gamma(mbar): regularized
// incomplete gamma at mbar*y; Erlang(M): 1 - e^-My sum_{k<M} (My)^k/k!.
double approx_cdf(const ApproxSpec& spec, double y);

}  // namespace netgeo
