// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 irs-netgeo contributors

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "netgeo/rng.hpp"

using netgeo::radical_inverse;
using netgeo::RngStream;

namespace {

// One-sample KS statistic against a continuous CDF.
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

// alpha = 0.001 asymptotic KS critical value for n = 1e5.
constexpr double kKsBound = 0.00617;
constexpr int kN = 100000;

}  // namespace

TEST_CASE("streams are deterministic and keyed by (seed, id)") {
  RngStream a(12345, 7), b(12345, 7), c(12345, 8), d(54321, 7);
  bool differs_c = false, differs_d = false;
  for (int i = 0; i < 64; ++i) {
    const std::uint64_t va = a.next_u64();
    CHECK(va == b.next_u64());
    differs_c |= (va != c.next_u64());
    differs_d |= (va != d.next_u64());
  }
  CHECK(differs_c);
  CHECK(differs_d);
}

TEST_CASE("uniform law") {
  RngStream rng(42, 0);
  std::vector<double> xs(kN);
  for (auto& x : xs) {
    x = rng.uniform();
    CHECK(x >= 0.0);
    CHECK(x < 1.0);
  }
  CHECK(ks_stat(std::move(xs), [](double x) { return x; }) < kKsBound);
}

TEST_CASE("uniform_pos never returns zero") {
  RngStream rng(42, 1);
  for (int i = 0; i < 100000; ++i) {
    const double u = rng.uniform_pos();
    CHECK(u > 0.0);
    CHECK(u <= 1.0);
  }
}

TEST_CASE("normal law") {
  RngStream rng(42, 2);
  std::vector<double> xs(kN);
  double mean = 0.0, sq = 0.0;
  for (auto& x : xs) {
    x = rng.normal();
    mean += x;
    sq += x * x;
  }
  mean /= kN;
  sq /= kN;
  CHECK(std::abs(mean) < 0.013);          // 4 sigma of the sample mean
  CHECK(std::abs(sq - 1.0) < 0.02);
  CHECK(ks_stat(std::move(xs), [](double x) {
          return 0.5 * std::erfc(-x / std::sqrt(2.0));
        }) < kKsBound);
}

TEST_CASE("exponential law") {
  RngStream rng(42, 3);
  std::vector<double> xs(kN);
  for (auto& x : xs) x = rng.exponential();
  CHECK(ks_stat(std::move(xs), [](double x) { return 1.0 - std::exp(-x); }) < kKsBound);
}

TEST_CASE("gamma moments") {
  RngStream rng(42, 4);
  double mean = 0.0, sq = 0.0;
  for (int i = 0; i < kN; ++i) {
    const double x = rng.gamma(2.5, 2.0);
    mean += x;
    sq += x * x;
  }
  mean /= kN;
  const double var = sq / kN - mean * mean;
  CHECK(mean == doctest::Approx(5.0).epsilon(0.016));
  CHECK(var == doctest::Approx(10.0).epsilon(0.10));

  // Shape below 1 exercises the boosted-shape path.
  double mean_small = 0.0;
  for (int i = 0; i < kN; ++i) mean_small += rng.gamma(0.5, 1.0);
  CHECK(mean_small / kN == doctest::Approx(0.5).epsilon(0.03));
}

TEST_CASE("poisson moments across the algorithm switch") {
  RngStream rng(42, 5);
  double mean = 0.0, sq = 0.0;
  for (int i = 0; i < kN; ++i) {
    const double k = static_cast<double>(rng.poisson(4.2));
    mean += k;
    sq += k * k;
  }
  mean /= kN;
  CHECK(mean == doctest::Approx(4.2).epsilon(0.01));
  CHECK(sq / kN - mean * mean == doctest::Approx(4.2).epsilon(0.05));

  double mean_big = 0.0;
  const int n_big = 20000;
  for (int i = 0; i < n_big; ++i) mean_big += static_cast<double>(rng.poisson(850.0));
  CHECK(mean_big / n_big == doctest::Approx(850.0).epsilon(0.002));
}

TEST_CASE("radical inverse digit reversal") {
  CHECK(radical_inverse(1, 2) == 0.5);
  CHECK(radical_inverse(2, 2) == 0.25);
  CHECK(radical_inverse(3, 2) == 0.75);
  CHECK(radical_inverse(4, 2) == 0.125);
  CHECK(radical_inverse(1, 3) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(radical_inverse(2, 3) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(radical_inverse(3, 3) == doctest::Approx(1.0 / 9.0).epsilon(1e-15));
  CHECK(radical_inverse(4, 3) == doctest::Approx(4.0 / 9.0).epsilon(1e-15));
  CHECK(radical_inverse(1, 5) == doctest::Approx(0.2).epsilon(1e-15));

  double acc = 0.0;
  for (std::uint64_t i = 1; i <= 4096; ++i) acc += radical_inverse(i, 2);
  CHECK(acc / 4096.0 == doctest::Approx(0.5).epsilon(0.002));
}

TEST_CASE("distinct streams are uncorrelated") {
  RngStream a(99, 0), b(99, 1);
  double sab = 0.0, sa = 0.0, sb = 0.0, saa = 0.0, sbb = 0.0;
  const int n = 50000;
  for (int i = 0; i < n; ++i) {
    const double x = a.uniform(), y = b.uniform();
    sab += x * y;
    sa += x;
    sb += y;
    saa += x * x;
    sbb += y * y;
  }
  const double cov = sab / n - (sa / n) * (sb / n);
  const double corr =
      cov / std::sqrt((saa / n - (sa / n) * (sa / n)) * (sbb / n - (sb / n) * (sb / n)));
  CHECK(std::abs(corr) < 0.02);
}
