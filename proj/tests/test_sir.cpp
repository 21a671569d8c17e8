// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 irs-netgeo contributors

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "netgeo/errors.hpp"
#include "netgeo/interference.hpp"
#include "netgeo/quad.hpp"
#include "netgeo/sir.hpp"
#include "netgeo/specfun.hpp"

using netgeo::ApproxSpec;
using netgeo::build_toeplitz;
using netgeo::ccdf_erlang_toeplitz;
using netgeo::ccdf_exp_route;
using netgeo::ccdf_sir;
using netgeo::Chi;
using netgeo::ck_coeff;
using netgeo::DiversityBound;
using netgeo::diversity_bound;
using netgeo::DomainError;
using netgeo::FadingSpec;
using netgeo::FixedDelta;
using netgeo::hyp2f1_negarg;
using netgeo::IrsConfig;
using netgeo::ModelII;
using netgeo::NetworkParams;
using netgeo::NoIrs;
using netgeo::Route;
using netgeo::SirQuery;
using netgeo::throughput;
using netgeo::ToeplitzSystem;
using netgeo::toeplitz_inverse_l1norm;

namespace {

SirQuery base_query() {
  SirQuery q;
  q.params = NetworkParams{};
  q.fading = FadingSpec{1.0, 1.0};
  return q;
}

SirQuery fixed_query(double theta, int n, double delta, Route route) {
  SirQuery q = base_query();
  q.theta = theta;
  q.irs.n_elements = n;
  q.irs.placement = FixedDelta{delta};
  q.route = route;
  return q;
}

}  // namespace

TEST_CASE("first Toeplitz coefficient at the classic parameters") {
  // theta = M = mu_gbar = 1, eta = 4: c_0 = F(1, -1/2; 1/2; -1) = 1 + pi/4.
  CHECK(ck_coeff(0, 1.0, 1, 1.0, 0.5) == doctest::Approx(1.0 + M_PI / 4.0).epsilon(1e-11));
}

TEST_CASE("higher coefficients match the direct hypergeometric product") {
  struct Case {
    double theta, mu_gbar, d;
    int m;
  };
  for (const Case c : {Case{0.9, 1.0, 0.5, 3}, Case{0.5, 1.3, 2.0 / 3.0, 2}}) {
    const double z = c.theta * c.m / c.mu_gbar;
    for (int k = 1; k <= 3; ++k) {
      const double direct = std::pow(z, k) * (-c.d / (k - c.d)) *
                            hyp2f1_negarg(k + 1.0, k - c.d, k - c.d + 1.0, z);
      CHECK(ck_coeff(k, c.theta, c.m, c.mu_gbar, c.d) ==
            doctest::Approx(direct).epsilon(1e-10));
      CHECK(ck_coeff(k, c.theta, c.m, c.mu_gbar, c.d) < 0.0);
    }
  }
}

TEST_CASE("Toeplitz system assembly") {
  const ToeplitzSystem sys = build_toeplitz(0.9, 4, 1.3, 0.5);
  CHECK(sys.M == 4);
  CHECK(sys.c.size() == 4);
  CHECK(sys.c[0] == doctest::Approx(ck_coeff(0, 0.9, 4, 1.3, 0.5)).epsilon(1e-14));
  CHECK(sys.c[3] == doctest::Approx(ck_coeff(3, 0.9, 4, 1.3, 0.5)).epsilon(1e-14));
}

TEST_CASE("inverse l1 norm by forward substitution") {
  ToeplitzSystem sys;
  sys.M = 3;
  sys.c = {2.0, -0.5, -0.25};
  // v = (0.5, 0.125, 0.09375); sum of magnitudes = 0.71875.
  CHECK(toeplitz_inverse_l1norm(sys) == doctest::Approx(0.71875).epsilon(1e-14));

  ToeplitzSystem singular;
  singular.M = 2;
  singular.c = {0.0, 1.0};
  CHECK_THROWS_AS(toeplitz_inverse_l1norm(singular), netgeo::SingularMatrix);
}

TEST_CASE("no-IRS Rayleigh collapses to the classic coverage formula") {
  SirQuery q = base_query();
  q.theta = 1.0;
  q.route = Route::ErlangToeplitz;
  CHECK(ccdf_erlang_toeplitz(q) ==
        doctest::Approx(1.0 / (1.0 + M_PI / 4.0)).epsilon(1e-10));
}

TEST_CASE("M = 1 route equals the averaged exclusion-ball Laplace transform") {
  // The Erlang route is derived from a PPP of effective density q*lambda seen
  // beyond R0; for M = 1 that average has the closed form the route computes.
  for (double eta : {4.0, 3.5}) {
    NetworkParams p;
    p.eta = eta;
    const double lam_eff = p.q * p.lambda;
    const netgeo::InterferenceLT lt{p.lambda, p.eta, p.l0};
    for (double theta : {0.5, 2.0}) {
      const double a = M_PI * lam_eff;
      const auto integrand = [&](double r) {
        const double s = theta * std::pow(r, p.eta) / std::pow(p.l0, p.eta);
        return 2.0 * a * r * std::exp(-a * r * r) * lt.lt_given_R0(s, r, lam_eff);
      };
      netgeo::QuadOptions opt;
      opt.rel_tol = 1e-10;
      const double ref =
          netgeo::integrate(integrand, 1e-6, 8.0 / std::sqrt(a), opt).value;

      SirQuery q = base_query();
      q.params = p;
      q.theta = theta;
      q.route = Route::ErlangToeplitz;
      CHECK(ccdf_erlang_toeplitz(q) == doctest::Approx(ref).epsilon(1e-7));
    }
  }
}

TEST_CASE("Model II and the equivalent fixed Delta give identical results") {
  NetworkParams p;
  p.l0 = 20.0;
  const double delta = netgeo::model2_delta(p.lambda, p.q, p.l0, p.eta);
  for (Route route : {Route::ErlangToeplitz, Route::ExpApprox}) {
    SirQuery a = base_query();
    a.params = p;
    a.theta = 2.0;
    a.irs.n_elements = 50;
    a.irs.placement = ModelII{};
    a.route = route;
    a.qmc_points = 1 << 13;
    SirQuery b = a;
    b.irs.placement = FixedDelta{delta};
    CHECK(ccdf_sir(a) == doctest::Approx(ccdf_sir(b)).epsilon(1e-14));
  }
}

TEST_CASE("CCDF approaches one as the threshold vanishes") {
  SirQuery q = base_query();
  q.theta = 1e-9;
  q.route = Route::ErlangToeplitz;
  CHECK(ccdf_erlang_toeplitz(q) >= 1.0 - 1e-6);

  SirQuery e = fixed_query(1e-8, 10, 1e-3, Route::ExpApprox);
  e.qmc_points = 1 << 12;
  CHECK(ccdf_exp_route(e) >= 0.999);
}

TEST_CASE("CCDF is nonincreasing in the threshold") {
  double prev_t = 1.0, prev_e = 1.0;
  for (double th_db = -10.0; th_db <= 20.0; th_db += 3.0) {
    const double theta = std::pow(10.0, th_db / 10.0);
    SirQuery t = fixed_query(theta, 100, 1.3e-3, Route::ErlangToeplitz);
    const double vt = ccdf_sir(t);
    CHECK(vt <= prev_t + 1e-12);
    CHECK(vt >= 0.0);
    prev_t = vt;

    SirQuery e = fixed_query(theta, 100, 1.3e-3, Route::ExpApprox);
    e.qmc_points = 1 << 12;
    const double ve = ccdf_sir(e);
    CHECK(ve <= prev_e + 1e-9);
    prev_e = ve;
  }
}

TEST_CASE("CCDF improves with element count and with Delta") {
  for (Route route : {Route::ErlangToeplitz, Route::ExpApprox}) {
    double prev = 0.0;
    for (int n : {10, 20, 100}) {
      SirQuery q = fixed_query(2.0, n, 1.3e-3, route);
      q.qmc_points = 1 << 12;
      const double v = ccdf_sir(q);
      CHECK(v >= prev - 1e-9);
      prev = v;
    }
    prev = 0.0;
    for (double delta : {1e-6, 1e-3, 1e-1}) {
      SirQuery q = fixed_query(2.0, 50, delta, route);
      q.qmc_points = 1 << 12;
      const double v = ccdf_sir(q);
      CHECK(v >= prev - 1e-9);
      prev = v;
    }
  }
}

TEST_CASE("route dispatch strips the IRS for the baseline route") {
  // Rayleigh baseline goes through the dominant-interferer Laplace average.
  SirQuery q = fixed_query(1.0, 100, 1.3e-3, Route::NoIrs);
  q.qmc_points = 1 << 13;
  SirQuery bare = base_query();
  bare.theta = 1.0;
  bare.route = Route::ExpApprox;
  bare.qmc_points = 1 << 13;
  CHECK(ccdf_sir(q) == doctest::Approx(ccdf_exp_route(bare)).epsilon(1e-12));

  // Nakagami baseline keeps the fading shape via the Toeplitz route.
  SirQuery qn = fixed_query(1.0, 100, 1.3e-3, Route::NoIrs);
  qn.fading.mu = 3.0;
  SirQuery bn = base_query();
  bn.theta = 1.0;
  bn.fading.mu = 3.0;
  bn.route = Route::ErlangToeplitz;
  CHECK(ccdf_sir(qn) == doctest::Approx(ccdf_erlang_toeplitz(bn)).epsilon(1e-12));
}

TEST_CASE("throughput conversions") {
  CHECK(throughput(1.0, 0.5) == doctest::Approx(0.5 * std::log(2.0)).epsilon(1e-14));
  CHECK(throughput(1.0, 0.5, 2.0) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(throughput(3.0, 1.0, 4.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(throughput(0.0, 0.7) == 0.0);
  CHECK_THROWS_AS(throughput(1.0, 0.5, 1.0), DomainError);
}

TEST_CASE("diversity bound table") {
  const FadingSpec rayl{1.0, 1.0};
  const FadingSpec nak{5.0, 1.0};
  using O = DiversityBound::Orientation;

  const DiversityBound expo = diversity_bound(netgeo::approx_spec(Chi::s, 10.0, 1.0), rayl);
  CHECK(expo.value == 1.0);
  CHECK(expo.orientation == O::lower);

  const DiversityBound m100 = diversity_bound(netgeo::approx_spec(Chi::m, 100.0, 1.0), rayl);
  CHECK(m100.value == 3.0);
  CHECK(m100.orientation == O::lower);

  const DiversityBound l100 = diversity_bound(netgeo::approx_spec(Chi::l, 100.0, 1.0), rayl);
  CHECK(l100.value == 32.0);
  CHECK(l100.orientation == O::upper);

  const DiversityBound nak_m = diversity_bound(netgeo::approx_spec(Chi::m, 100.0, 5.0), nak);
  CHECK(nak_m.value == 16.0);
  CHECK(nak_m.orientation == O::upper);

  const DiversityBound nak_s = diversity_bound(netgeo::approx_spec(Chi::s, 10.0, 5.0), nak);
  CHECK(nak_s.value == 5.0);
  CHECK(nak_s.orientation == O::upper);

  const DiversityBound gam =
      diversity_bound(netgeo::approx_spec_gamma(Chi::m, 100.0, 1.0), rayl);
  CHECK(gam.value == doctest::Approx(std::pow(100.0, 0.25)).epsilon(1e-12));
  CHECK(gam.orientation == O::lower);
}
