// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 irs-netgeo contributors
//
// Small estimator toolkit over sample vectors: empirical CDF/CCDF, moments,
// order-statistic quantiles, and the Kolmogorov-Smirnov sup distance against
// a reference CDF.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

#include "netgeo/errors.hpp"

namespace netgeo {

class EmpiricalDistribution {
 public:
  explicit EmpiricalDistribution(std::vector<double> samples)
      : sorted_(std::move(samples)) {
    if (sorted_.empty()) throw DomainError("EmpiricalDistribution: empty sample set");
    std::sort(sorted_.begin(), sorted_.end());
  }

  std::size_t size() const { return sorted_.size(); }
  const std::vector<double>& sorted() const { return sorted_; }
  double min() const { return sorted_.front(); }
  double max() const { return sorted_.back(); }

  // #{s <= x} / n.
  double cdf(double x) const {
    const auto it = std::upper_bound(sorted_.begin(), sorted_.end(), x);
    return static_cast<double>(it - sorted_.begin()) / static_cast<double>(sorted_.size());
  }

  double ccdf(double x) const { return 1.0 - cdf(x); }

  double mean() const {
    double acc = 0.0;
    for (double s : sorted_) acc += s;
    return acc / static_cast<double>(sorted_.size());
  }

  // Unbiased (n-1) sample variance.
  double variance() const {
    const double m = mean();
    double acc = 0.0;
    for (double s : sorted_) acc += (s - m) * (s - m);
    return sorted_.size() > 1 ? acc / static_cast<double>(sorted_.size() - 1) : 0.0;
  }

  // Order-statistic quantile: the k-th smallest with k = ceil(p n), clamped
  // to [1, n]. Exact inverse of the right-continuous empirical CDF.
  double quantile(double p) const {
    if (!(p >= 0.0 && p <= 1.0)) throw DomainError("quantile: p outside [0, 1]");
    const auto n = static_cast<double>(sorted_.size());
    auto k = static_cast<std::size_t>(std::ceil(p * n));
    k = std::min(std::max<std::size_t>(k, 1), sorted_.size());
    return sorted_[k - 1];
  }

 private:
  std::vector<double> sorted_;
};

// sup_x |F_n(x) - F(x)| over the sample points (where the sup of a
// right-continuous step function against a continuous CDF is attained).
inline double ks_distance(const EmpiricalDistribution& emp,
                          const std::function<double(double)>& cdf) {
  const auto& xs = emp.sorted();
  const double n = static_cast<double>(xs.size());
  double sup = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double f = cdf(xs[i]);
    sup = std::max(sup, std::abs(f - static_cast<double>(i + 1) / n));
    sup = std::max(sup, std::abs(f - static_cast<double>(i) / n));
  }
  return sup;
}

}  // namespace netgeo
