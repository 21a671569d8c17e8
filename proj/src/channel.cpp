// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 irs-netgeo contributors

#include "netgeo/channel.hpp"

#include <cmath>
#include <cstdio>

#include "netgeo/errors.hpp"
#include "netgeo/sampling.hpp"
#include "netgeo/specfun.hpp"

namespace netgeo {
namespace {

// Half-away-from-zero, per the regime table convention.
int round_shape(double mbar) {
  const double r = std::round(mbar);
  if (r < 1.0) {
    std::fprintf(stderr, "approx_spec: Erlang shape %.3f clamped to 1\n", mbar);
    return 1;
  }
  return static_cast<int>(r);
}

double shape_mbar(Chi chi, double n, double mu, bool refined, double n_delta) {
  switch (chi) {
    case Chi::s:
      return mu;  // Rayl exponential handled by caller; Nak Erlang(round(mu))
    case Chi::m:
      if (refined) {
        if (n_delta <= 0.0) throw DomainError("approx_spec: refined m-regime needs N*Delta");
        return std::pow(n, 0.75 + std::log10(n_delta) / 4.0) * mu;
      }
      return std::pow(n, 0.25) * mu;
    case Chi::l:
      return std::pow(n, 0.75) * mu;
  }
  return mu;
}

}  // namespace

double mu_fad(double mu) {
  if (mu < 0.5) throw DomainError("mu_fad: mu must be >= 0.5");
  return std::exp(lgamma_ts(mu + 0.5) - lgamma_ts(mu)) * std::sqrt(1.0 / mu);
}

double mean_tilde_g(double n_elements, double delta, double mu) {
  const double mf = mu_fad(mu);
  const double mf2 = mf * mf;
  const double mf4 = mf2 * mf2;
  return 1.0 +
         n_elements * (2.0 * std::sqrt(delta) * mf * mf2 + delta * (1.0 - mf4)) +
         n_elements * n_elements * delta * mf4;
}

double sample_tilde_g(int n_elements, double delta, const FadingSpec& fading, RngStream& rng) {
  const double g0 = sample_nakagami(fading.mu, fading.omega, rng);
  double indirect = 0.0;
  if (delta > 0.0) {
    for (int i = 0; i < n_elements; ++i) {
      indirect += sample_nakagami(fading.mu, fading.omega, rng) *
                  sample_nakagami(fading.mu, fading.omega, rng);
    }
  }
  const double amp = g0 + std::sqrt(delta) * indirect;
  return amp * amp;
}

double sample_g(int n_elements, double delta, const FadingSpec& fading, RngStream& rng) {
  return sample_tilde_g(n_elements, delta, fading, rng) /
         mean_tilde_g(n_elements, delta, fading.mu);
}

Chi classify_regime(double n_elements, double delta) {
  if (n_elements < 0.0) throw DomainError("classify_regime: N must be >= 0");
  const double nd = n_elements * delta;
  if (nd <= 1e-4) return Chi::s;
  if (nd >= 1.0) return Chi::l;
  return Chi::m;
}

ApproxSpec approx_spec(Chi chi, double n_elements, double mu, bool refined, double n_delta) {
  ApproxSpec spec;
  spec.chi = chi;
  if (chi == Chi::s && mu == 1.0) {
    spec.kind = ApproxSpec::Kind::Exponential;
    spec.mbar = 1.0;
    spec.M = 1;
    return spec;
  }
  spec.kind = ApproxSpec::Kind::Erlang;
  spec.mbar = shape_mbar(chi, n_elements, mu, refined, n_delta);
  spec.M = round_shape(spec.mbar);
  return spec;
}

ApproxSpec approx_spec_gamma(Chi chi, double n_elements, double mu, bool refined,
                             double n_delta) {
  ApproxSpec spec = approx_spec(chi, n_elements, mu, refined, n_delta);
  if (spec.kind == ApproxSpec::Kind::Erlang) spec.kind = ApproxSpec::Kind::Gamma;
  return spec;
}

double approx_cdf(const ApproxSpec& spec, double y) {
  if (y <= 0.0) return 0.0;
  switch (spec.kind) {
    case ApproxSpec::Kind::Exponential:
      return -std::expm1(-y);
    case ApproxSpec::Kind::Gamma:
      return reg_lower_inc_gamma(spec.mbar, spec.mbar * y);
    case ApproxSpec::Kind::Erlang: {
      // 1 - e^-My sum_{k=0}^{M-1} (My)^k / k!, summed forward (all terms
      // positive). When the largest term would overflow on its own, the
      // identical value is computed as the regularized gamma P(M, My).
      const double my = static_cast<double>(spec.M) * y;
      if (my > 700.0) return 1.0;
      const double m = static_cast<double>(spec.M);
      if ((m - 1.0) * std::log(my + 1e-300) - lgamma_ts(m) > 650.0)
        return reg_lower_inc_gamma(m, my);
      double term = 1.0;
      double sum = 1.0;
      for (int k = 1; k < spec.M; ++k) {
        term *= my / static_cast<double>(k);
        sum += term;
      }
      return 1.0 - std::exp(-my) * sum;
    }
  }
  return 0.0;
}

}  // namespace netgeo
