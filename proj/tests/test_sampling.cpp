// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 irs-netgeo contributors

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "netgeo/rng.hpp"
#include "netgeo/sampling.hpp"

using netgeo::Point2D;
using netgeo::RngStream;
using netgeo::sample_nakagami;
using netgeo::sample_ppp_disk;
using netgeo::sample_R0;
using netgeo::sample_Rd_given_R0;

namespace {

double ks_stat(std::vector<double> xs, const std::function<double(double)>& cdf) {
  std::sort(xs.begin(), xs.end());
  const double n = static_cast<double>(xs.size());
  double sup = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double f = cdf(xs[i]);
    sup = std::max(sup, std::abs(f - (i + 1.0) / n));
    sup = std::max(sup, std::abs(f - i / n));
  }
  return sup;
}

constexpr double kKsBound = 0.00617;  // alpha = 0.001 at n = 1e5
constexpr int kN = 100000;
constexpr double kLambda = 1e-5;
constexpr double kQ = 9.0 / 7.0;

}  // namespace

TEST_CASE("nakagami mu=1 power is unit exponential") {
  RngStream rng(7, 0);
  std::vector<double> pw(kN);
  for (auto& p : pw) {
    const double g = sample_nakagami(1.0, 1.0, rng);
    CHECK(g >= 0.0);
    p = g * g;
  }
  CHECK(ks_stat(std::move(pw), [](double x) { return 1.0 - std::exp(-x); }) < kKsBound);
}

TEST_CASE("nakagami power is gamma(mu, omega/mu)") {
  const double mu = 3.7, omega = 2.0;
  RngStream rng(7, 1);
  double mean = 0.0, sq = 0.0;
  for (int i = 0; i < kN; ++i) {
    const double p = std::pow(sample_nakagami(mu, omega, rng), 2);
    mean += p;
    sq += p * p;
  }
  mean /= kN;
  const double var = sq / kN - mean * mean;
  CHECK(mean == doctest::Approx(omega).epsilon(0.01));
  CHECK(var == doctest::Approx(omega * omega / mu).epsilon(0.05));
}

TEST_CASE("serving distance law") {
  RngStream rng(7, 2);
  std::vector<double> xs(kN);
  for (auto& x : xs) x = sample_R0(kLambda, kQ, rng);
  const double a = M_PI * kQ * kLambda;
  CHECK(ks_stat(std::move(xs), [a](double x) { return 1.0 - std::exp(-a * x * x); }) <
        kKsBound);
}

TEST_CASE("dominant interferer distance law conditioned on R0") {
  const double r0 = 150.0;
  RngStream rng(7, 3);
  std::vector<double> xs(kN);
  for (auto& x : xs) {
    x = sample_Rd_given_R0(r0, kLambda, kQ, rng);
    CHECK(x >= r0);
  }
  const double a = M_PI * kQ * kLambda;
  CHECK(ks_stat(std::move(xs), [a, r0](double r) {
          return 1.0 - std::exp(-a * (r * r - r0 * r0));
        }) < kKsBound);
}

TEST_CASE("ppp on a disk: count and uniformity") {
  const double lambda = 1e-4, radius = 1000.0;
  const Point2D center{5.0, 7.0};
  RngStream rng(7, 4);
  const int reps = 2000;
  double count_sum = 0.0, rr_sum = 0.0;
  long total = 0;
  for (int i = 0; i < reps; ++i) {
    const auto ps = sample_ppp_disk(lambda, radius, center, rng);
    count_sum += static_cast<double>(ps.points.size());
    for (const auto& p : ps.points) {
      const double dx = p.x - center.x, dy = p.y - center.y;
      const double rr = dx * dx + dy * dy;
      CHECK(rr <= radius * radius * (1.0 + 1e-12));
      rr_sum += rr;
      ++total;
    }
  }
  const double mean_count = lambda * M_PI * radius * radius;
  CHECK(count_sum / reps == doctest::Approx(mean_count).epsilon(0.02));
  // Uniform in the disk: E[r^2] = radius^2 / 2.
  CHECK(rr_sum / total == doctest::Approx(radius * radius / 2.0).epsilon(0.01));
}
