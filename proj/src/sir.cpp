// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 irs-netgeo contributors

#include "netgeo/sir.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <tuple>
#include <variant>

#include "netgeo/errors.hpp"
#include "netgeo/interference.hpp"
#include "netgeo/quad.hpp"
#include "netgeo/specfun.hpp"

namespace netgeo {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Model I quantities are expensive (nested adaptive quadrature) and theta
// sweeps reuse one geometry, so both the quantile and the winsorized mean sit
// behind read-dominant caches.
using GeomKey = std::tuple<double, double, double, double, double, double>;

double model1_quantile_cached(double p, const NetworkParams& params, double r2) {
  static std::map<GeomKey, double> cache;
  static std::mutex mtx;
  const GeomKey key{params.lambda, params.q, r2, params.l0, params.eta, p};
  {
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  const double val =
      model1_delta_quantile(p, params.lambda, params.q, r2, params.l0, params.eta);
  std::lock_guard<std::mutex> lock(mtx);
  cache.emplace(key, val);
  return val;
}

// Winsorized E[mean_tilde_g(N, Delta)] for Model I, truncating Delta at its
// 99.9% quantile T. With g(x) = E[G~|Delta = x],
//   E[g(min(Delta, T))] = g(T) - Int_0^T g'(x) F_Delta(x) dx,
// and the substitution x = v^2 absorbs the 1/sqrt(x) factor of g':
//   g'(v^2) 2v = 2 N mu_f^3 + 2 v (N (1 - mu_f^4) + N^2 mu_f^4).
double model1_winsorized_mean(const NetworkParams& params, double r2, int n, double mu) {
  static std::map<std::tuple<GeomKey, double>, double> cache;
  static std::mutex mtx;
  const GeomKey gkey{params.lambda, params.q, r2, params.l0, params.eta,
                     static_cast<double>(n)};
  const std::tuple<GeomKey, double> key{gkey, mu};
  {
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }

  const double T = model1_quantile_cached(0.999, params, r2);
  const double mf = mu_fad(mu);
  const double mf3 = mf * mf * mf;
  const double mf4 = mf3 * mf;
  const double a_lin = 2.0 * n * mf3;
  const double b_lin = 2.0 * (n * (1.0 - mf4) + static_cast<double>(n) * n * mf4);
  const auto integrand = [&](double v) {
    const double cdf = model1_cdf_delta(v * v, params.lambda, params.q, r2,
                                        params.l0, params.eta);
    return (a_lin + b_lin * v) * cdf;
  };
  QuadOptions opt;
  opt.rel_tol = 1e-8;
  opt.abs_tol = 1e-12;
  const double correction = integrate(integrand, 0.0, std::sqrt(T), opt).value;
  const double val = mean_tilde_g(n, T, mu) - correction;

  std::lock_guard<std::mutex> lock(mtx);
  cache.emplace(key, val);
  return val;
}

bool is_no_irs(const IrsConfig& irs) {
  return irs.n_elements <= 0 || std::holds_alternative<NoIrs>(irs.placement);
}

}  // namespace

double representative_delta(const NetworkParams& params, const IrsConfig& irs) {
  if (is_no_irs(irs)) return 0.0;
  if (const auto* m1 = std::get_if<ModelI>(&irs.placement))
    return model1_quantile_cached(0.5, params, m1->r2);
  if (std::holds_alternative<ModelII>(irs.placement))
    return model2_delta(params.lambda, params.q, params.l0, params.eta);
  return std::get<FixedDelta>(irs.placement).delta;
}

double mu_tilde_g_bar(const NetworkParams& params, const IrsConfig& irs,
                      const FadingSpec& fading) {
  if (is_no_irs(irs)) return 1.0;
  const int n = irs.n_elements;
  if (const auto* m1 = std::get_if<ModelI>(&irs.placement))
    return model1_winsorized_mean(params, m1->r2, n, fading.mu);
  if (std::holds_alternative<ModelII>(irs.placement))
    return mean_tilde_g(n, model2_delta(params.lambda, params.q, params.l0, params.eta),
                        fading.mu);
  return mean_tilde_g(n, std::get<FixedDelta>(irs.placement).delta, fading.mu);
}

double ck_coeff(int k, double theta, int M, double mu_gbar, double delta_pl) {
  if (k < 0 || M < 1) throw DomainError("ck_coeff: k >= 0 and M >= 1 required");
  if (!(theta > 0.0) || !(mu_gbar > 0.0))
    throw DomainError("ck_coeff: theta and mu_gbar must be positive");
  if (!(delta_pl > 0.0 && delta_pl < 1.0))
    throw DomainError("ck_coeff: delta_pl must lie in (0, 1)");
  const double z = theta * M / mu_gbar;
  if (k == 0) return hyp2f1_negarg(1.0, -delta_pl, 1.0 - delta_pl, z);
  // (1)_k / k! = 1 and (-d)_k / (1-d)_k telescopes to -d/(k-d); the magnitude
  // is assembled in logs because z^k and the 2F1 value separately leave double
  // range near the top of the Erlang shapes even though c_k itself is tame.
  const double ln_mag = std::log(delta_pl / (k - delta_pl)) + k * std::log(z) +
                        hyp2f1_negarg_ln(k + 1.0, k - delta_pl, z);
  return -std::exp(ln_mag);
}

ToeplitzSystem build_toeplitz(double theta, int M, double mu_gbar, double delta_pl) {
  ToeplitzSystem sys;
  sys.M = M;
  sys.c.resize(static_cast<size_t>(M));
  for (int k = 0; k < M; ++k) sys.c[static_cast<size_t>(k)] = ck_coeff(k, theta, M, mu_gbar, delta_pl);
  return sys;
}

double toeplitz_inverse_l1norm(const ToeplitzSystem& sys) {
  if (sys.M < 1 || sys.c.size() != static_cast<size_t>(sys.M))
    throw DomainError("toeplitz_inverse_l1norm: inconsistent system");
  const double c0 = sys.c[0];
  if (!(std::abs(c0) > 1e-300) || !std::isfinite(c0))
    throw SingularMatrix("toeplitz_inverse_l1norm: singular leading coefficient");
  std::vector<double> v(static_cast<size_t>(sys.M));
  v[0] = 1.0 / c0;
  double norm = std::abs(v[0]);
  for (int k = 1; k < sys.M; ++k) {
    double acc = 0.0;
    for (int j = 1; j <= k; ++j) acc += sys.c[static_cast<size_t>(j)] * v[static_cast<size_t>(k - j)];
    v[static_cast<size_t>(k)] = -acc / c0;
    norm += std::abs(v[static_cast<size_t>(k)]);
  }
  return norm;
}

double ccdf_erlang_toeplitz(const SirQuery& query) {
  if (!(query.theta > 0.0)) throw DomainError("ccdf_erlang_toeplitz: theta must be positive");
  int M = 1;
  double mu_gbar = 1.0;
  if (is_no_irs(query.irs)) {
    if (query.fading.zeta() == Zeta::Nak) {
      const ApproxSpec spec = approx_spec(Chi::s, 1.0, query.fading.mu);
      M = spec.M;  // round(mu)
    }
  } else {
    mu_gbar = mu_tilde_g_bar(query.params, query.irs, query.fading);
    const double drep = representative_delta(query.params, query.irs);
    const Chi chi = query.chi_override ? *query.chi_override
                                       : classify_regime(query.irs.n_elements, drep);
    const ApproxSpec spec =
        approx_spec(chi, query.irs.n_elements, query.fading.mu, query.refined,
                    query.irs.n_elements * drep);
    M = spec.M;
  }
  const ToeplitzSystem sys = build_toeplitz(query.theta, M, mu_gbar, query.params.delta_pl());
  return std::clamp(toeplitz_inverse_l1norm(sys), 0.0, 1.0);
}

double ccdf_exp_route(const SirQuery& query) {
  if (!(query.theta > 0.0)) throw DomainError("ccdf_exp_route: theta must be positive");
  const NetworkParams& p = query.params;
  const double piqlam = kPi * p.q * p.lambda;
  const InterferenceLT lt{p.lambda, p.eta, p.l0};
  const double l0_eta = std::pow(p.l0, p.eta);
  const int n_irs = is_no_irs(query.irs) ? 0 : query.irs.n_elements;
  const double mu = query.fading.mu;
  const int n_pts = std::max(query.qmc_points, 1);

  const ModelI* m1 = n_irs > 0 ? std::get_if<ModelI>(&query.irs.placement) : nullptr;
  double fixed_delta = 0.0;
  if (n_irs > 0 && !m1) {
    fixed_delta = std::holds_alternative<ModelII>(query.irs.placement)
                      ? model2_delta(p.lambda, p.q, p.l0, p.eta)
                      : std::get<FixedDelta>(query.irs.placement).delta;
  }

  EvalTolerance lt_tol;
  lt_tol.rel_tol = 1e-10;
  double acc = 0.0;
  for (int i = 1; i <= n_pts; ++i) {
    const double u1 = radical_inverse(static_cast<uint64_t>(i), 2);
    const double u2 = radical_inverse(static_cast<uint64_t>(i), 3);
    const double u3 = radical_inverse(static_cast<uint64_t>(i), 5);
    const double r0 = std::sqrt(-std::log1p(-u1) / piqlam);
    const double rd = std::sqrt(r0 * r0 - std::log1p(-u3) / piqlam);
    double delta = 0.0;
    if (m1) {
      const double r1 = model1_R1(r0, m1->r2, 2.0 * kPi * u2);
      delta = triangle_delta(r0, r1, m1->r2, p.eta, p.l0);
    } else if (n_irs > 0) {
      delta = fixed_delta;
    }
    const double mean_g = mean_tilde_g(n_irs, delta, mu);
    if (!(r0 > 0.0)) {
      acc += 1.0;
      continue;
    }
    const double s = query.theta * std::pow(r0, p.eta) / (l0_eta * mean_g);
    acc += lt.lt_given_Rd(s, rd, lt_tol);
  }
  return std::clamp(acc / n_pts, 0.0, 1.0);
}

double ccdf_sir(const SirQuery& query) {
  switch (query.route) {
    case Route::ExpApprox:
      return ccdf_exp_route(query);
    case Route::ErlangToeplitz:
      return ccdf_erlang_toeplitz(query);
    case Route::NoIrs: {
      SirQuery base = query;
      base.irs = IrsConfig{};
      base.chi_override.reset();
      base.route = query.fading.zeta() == Zeta::Rayl ? Route::ExpApprox
                                                     : Route::ErlangToeplitz;
      return ccdf_sir(base);
    }
  }
  throw ConfigError("ccdf_sir: unknown route");
}

double throughput(double theta, double ccdf_value, double log_base) {
  if (!(theta >= 0.0)) throw DomainError("throughput: theta must be nonnegative");
  const double nats = ccdf_value * std::log1p(theta);
  if (log_base <= 0.0) return nats;  // natural log by default
  if (log_base == 1.0) throw DomainError("throughput: log base 1 is undefined");
  return nats / std::log(log_base);
}

DiversityBound diversity_bound(const ApproxSpec& spec, const FadingSpec& fading) {
  DiversityBound bound;
  if (spec.kind == ApproxSpec::Kind::Exponential) {
    bound.value = 1.0;
    bound.orientation = DiversityBound::Orientation::lower;
    return bound;
  }
  bound.value = spec.kind == ApproxSpec::Kind::Gamma ? spec.mbar
                                                     : static_cast<double>(spec.M);
  if (fading.zeta() == Zeta::Nak) {
    bound.orientation = DiversityBound::Orientation::upper;
  } else {
    bound.orientation = spec.chi == Chi::l ? DiversityBound::Orientation::upper
                                           : DiversityBound::Orientation::lower;
  }
  return bound;
}

}  // namespace netgeo
