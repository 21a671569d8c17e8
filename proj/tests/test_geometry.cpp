// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 irs-netgeo contributors

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "netgeo/errors.hpp"
#include "netgeo/geometry.hpp"
#include "netgeo/rng.hpp"
#include "netgeo/sampling.hpp"
#include "netgeo/stats.hpp"

using netgeo::DomainError;
using netgeo::EmpiricalDistribution;
using netgeo::GeometryInfeasible;
using netgeo::model1_cdf_delta;
using netgeo::model1_cdf_R1_given_R0;
using netgeo::model1_delta_quantile;
using netgeo::model1_R1;
using netgeo::model2_delta;
using netgeo::model2_geometry;
using netgeo::RngStream;
using netgeo::triangle_delta;

namespace {
constexpr double kLambda = 1e-5;
constexpr double kQ = 9.0 / 7.0;
constexpr double kEta = 4.0;
constexpr double kL0 = 1.0;
const double kR2 = 1.0 / (60.0 * std::sqrt(kLambda));
constexpr double kInf = std::numeric_limits<double>::infinity();
}  // namespace

TEST_CASE("law of cosines for the BS-IRS distance") {
  const double r0 = 100.0, r2 = 5.0;
  CHECK(model1_R1(r0, r2, 0.0) == doctest::Approx(95.0).epsilon(1e-13));
  CHECK(model1_R1(r0, r2, M_PI) == doctest::Approx(105.0).epsilon(1e-13));
  CHECK(model1_R1(r0, r2, M_PI / 2.0) ==
        doctest::Approx(std::sqrt(10025.0)).epsilon(1e-13));
}

TEST_CASE("conditional R1 CDF support and midpoint") {
  const double r0 = 100.0, r2 = 5.0;
  CHECK(model1_cdf_R1_given_R0(94.9, r0, r2) == 0.0);
  CHECK(model1_cdf_R1_given_R0(105.1, r0, r2) == 1.0);
  CHECK(model1_cdf_R1_given_R0(std::sqrt(r0 * r0 + r2 * r2), r0, r2) ==
        doctest::Approx(0.5).epsilon(1e-12));
  double prev = 0.0;
  for (double x = 94.0; x <= 106.0; x += 0.25) {
    const double f = model1_cdf_R1_given_R0(x, r0, r2);
    CHECK(f >= prev);
    prev = f;
  }
}

TEST_CASE("conditional R1 CDF matches sampled angles") {
  const double r0 = 139.44, r2 = kR2;
  RngStream rng(11, 0);
  std::vector<double> xs(100000);
  for (auto& x : xs) x = model1_R1(r0, r2, 2.0 * M_PI * rng.uniform());
  const EmpiricalDistribution emp(std::move(xs));
  CHECK(netgeo::ks_distance(emp, [&](double x) {
          return model1_cdf_R1_given_R0(x, r0, r2);
        }) < 0.0075);
}

TEST_CASE("triangle parameter value and conventions") {
  const double r0 = 120.0, r1 = 118.0, r2 = 5.0;
  const double ref = std::pow(r0 * kL0 / (r1 * r2), kEta);
  CHECK(triangle_delta(r0, r1, r2, kEta, kL0) == doctest::Approx(ref).epsilon(1e-13));
  CHECK(triangle_delta(r0, kInf, kInf, kEta, kL0) == 0.0);
  CHECK_THROWS_AS(triangle_delta(r0, kInf, r2, kEta, kL0), DomainError);
  CHECK_THROWS_AS(triangle_delta(r0, r1, kInf, kEta, kL0), DomainError);
}

TEST_CASE("swap symmetry of the indirect hop distances is exact") {
  const double pairs[][2] = {{118.0, 5.0}, {200.0, 1.0}, {3.7, 93.1}, {55.5, 55.6}};
  for (const auto& p : pairs) {
    CHECK(triangle_delta(140.0, p[0], p[1], kEta, kL0) ==
          triangle_delta(140.0, p[1], p[0], kEta, kL0));
  }
}

TEST_CASE("unconditional Delta CDF is a proper monotone CDF") {
  double prev = 0.0;
  for (double x = 1e-4; x <= 1e-2; x *= 1.5) {
    const double f = model1_cdf_delta(x, kLambda, kQ, kR2, kL0, kEta);
    CHECK(f >= prev - 1e-12);
    CHECK(f >= 0.0);
    CHECK(f <= 1.0);
    prev = f;
  }
  CHECK(prev > 0.99);  // nearly all mass sits below 1e-2 at these parameters
}

TEST_CASE("unconditional Delta CDF matches sampled geometry") {
  RngStream rng(11, 1);
  std::vector<double> ds(100000);
  for (auto& d : ds) {
    const double r0 = netgeo::sample_R0(kLambda, kQ, rng);
    const double r1 = model1_R1(r0, kR2, 2.0 * M_PI * rng.uniform());
    d = triangle_delta(r0, r1, kR2, kEta, kL0);
  }
  const EmpiricalDistribution emp(std::move(ds));
  // Grid KS over sample quantiles (full per-sample evaluation would run 1e5
  // quadratures); grid spacing adds at most ~1/200 to the bound.
  double sup = 0.0;
  for (int i = 1; i < 200; ++i) {
    const double x = emp.quantile(i / 200.0);
    sup = std::max(sup,
                   std::abs(emp.cdf(x) - model1_cdf_delta(x, kLambda, kQ, kR2, kL0, kEta)));
  }
  CHECK(sup < 0.015);
}

TEST_CASE("Delta quantile inverts the CDF") {
  for (double p : {0.05, 0.5, 0.9, 0.999}) {
    const double x = model1_delta_quantile(p, kLambda, kQ, kR2, kL0, kEta);
    CHECK(model1_cdf_delta(x, kLambda, kQ, kR2, kL0, kEta) ==
          doctest::Approx(p).epsilon(1e-5));
  }
}

TEST_CASE("deterministic Model II Delta frozen references") {
  CHECK(model2_delta(kLambda, kQ, 1.0, kEta) ==
        doctest::Approx(8.3591836734693877551e-9).epsilon(1e-12));
  CHECK(model2_delta(kLambda, kQ, 20.0, kEta) ==
        doctest::Approx(1.3374693877551020408e-3).epsilon(1e-12));
}

TEST_CASE("Model II geometry closes the triangle or throws") {
  const double r0 = 100.0;
  const auto g = model2_geometry(r0, kLambda, kQ, kL0, kEta);
  CHECK(g.R0 == r0);
  CHECK(g.R1 == g.R2);
  CHECK(g.R1 + g.R2 >= r0);
  CHECK(g.delta == doctest::Approx(model2_delta(kLambda, kQ, kL0, kEta)).epsilon(1e-12));
  CHECK(triangle_delta(g.R0, g.R1, g.R2, kEta, kL0) ==
        doctest::Approx(g.delta).epsilon(1e-12));

  const double feas = 3.0 / (2.0 * std::sqrt(kQ * kLambda));  // R0 limit 4/c^2
  CHECK_NOTHROW(model2_geometry(0.999 * feas, kLambda, kQ, kL0, kEta));
  CHECK_THROWS_AS(model2_geometry(1.001 * feas, kLambda, kQ, kL0, kEta),
                  GeometryInfeasible);
}
