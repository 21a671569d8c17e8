// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 irs-netgeo contributors
//
// Ground-truth network simulator. Two modes:
//
//   DistanceModel  - samples the serving distance R0 and the dominant
//                    interferer distance Rd from their typical-cell laws,
//                    then adds a Poisson field of further interferers on an
//                    annulus whose outer radius is chosen per realization so
//                    the mean of the clipped far field (added back as a
//                    deterministic compensation term) leaves only a
//                    fluctuation error far below Monte Carlo noise.
//   VoronoiExact   - realizes the point process in a large window with the
//                    serving BS at the origin, rejection-samples the user
//                    uniformly in the origin's Voronoi cell, and sums
//                    interference over every other BS plus the analytic
//                    far-field mean beyond the window.
//
// Results are reproducible for any worker count: realization i always draws
// from streams (seed, 2i) for network randomness and (seed, 2i+1) for
// serving-link fading, so sample i depends only on (seed, i). Splitting the
// fading stream also keeps the network realization shared across runs that
// differ only in the IRS setup, which makes paired comparisons (gain vs the
// no-IRS baseline, nearby element counts) nearly noise-free.

#pragma once

#include <cstdint>
#include <vector>

#include "netgeo/rng.hpp"
#include "netgeo/sampling.hpp"
#include "netgeo/sir.hpp"

namespace netgeo {

enum class SimMode { DistanceModel, VoronoiExact };

struct SimConfig {
  NetworkParams params;
  IrsConfig irs;
  FadingSpec fading;
  std::uint64_t seed = 1;
  int n_workers = 0;             // 0 -> std::thread::hardware_concurrency()
  bool collect_g = false;        // also record normalized G draws
  double tail_rel_bound = 1e-4;  // far-field fluctuation bound, rel. to mean I
  double window_factor = 15.0;   // VoronoiExact window radius, units 1/sqrt(lambda)
};

struct SimMeta {
  std::uint64_t seed = 0;
  std::size_t n = 0;
  SimMode mode = SimMode::DistanceModel;
  double truncation_radius = 0.0;     // window (VoronoiExact) or mean annulus outer radius
  std::uint64_t rejected_geometry = 0;  // infeasible Model II draws, resampled
};

struct SimResult {
  std::vector<double> sir_samples;  // linear SIR, one per realization
  std::vector<double> g_samples;    // filled iff config.collect_g
  SimMeta meta;
};

struct SirCurve {
  std::vector<double> theta;  // linear thresholds
  std::vector<double> ccdf;
};

SimResult simulate_sir(const SimConfig& config, std::size_t n, SimMode mode);

// Uniform point in the Voronoi cell of the origin BS (which must be
// bs.points[0]): rejection from a uniform proposal on a disk of
// proposal_radius, accepted iff no other BS is closer. Throws
// RejectionBudgetExceeded after budget proposals.
Point2D voronoi_typical_ue(const PointSet2D& bs, double proposal_radius, RngStream& rng,
                           std::uint64_t budget = 1000000);

// Empirical CCDF over a threshold grid: ccdf[i] = #{s > theta[i]} / n.
SirCurve empirical_ccdf(const std::vector<double>& samples,
                        const std::vector<double>& theta_grid);

struct SlopeWindow {
  double f_hi = 1e-2;                 // shallow CDF level
  double f_lo = 0.00316227766016838;  // 10^-2.5, deep CDF level
};

// Outage-slope estimate: slope of log10 F_SIR vs log10 theta between the
// order-statistic quantiles at f_hi and f_lo. Requires >= 100 samples below
// the deep quantile; otherwise throws InsufficientTailMass carrying the
// depth log10(100/n) that the sample size can resolve.
double diversity_slope(const std::vector<double>& sir_samples, const SlopeWindow& window = {});

struct DiversityRun {
  double slope = 0.0;
  std::size_t n_used = 0;
  double rel_se = 0.0;  // delta-method relative standard error of the slope
};

// Adaptive diversity estimation: simulate on an escalating sample-size
// ladder until the slope's estimated relative standard error drops under
// target_rel_se (or the ladder is exhausted; the last rung's estimate is
// returned with its achieved rel_se).
DiversityRun estimate_diversity(const SimConfig& config, SimMode mode,
                                const SlopeWindow& window = {},
                                double target_rel_se = 0.05,
                                const std::vector<std::size_t>& ladder = {100000, 1000000,
                                                                          10000000});

}  // namespace netgeo
