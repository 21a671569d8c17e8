// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 irs-netgeo contributors

#include "netgeo/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>
#include <variant>

#include "netgeo/channel.hpp"
#include "netgeo/errors.hpp"
#include "netgeo/stats.hpp"

namespace netgeo {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr std::size_t kBlock = 8192;  // realizations per RNG stream
constexpr double kGamma2Median = 1.6783469900166608;  // median of Gamma(2,1)

// Uniform-cell spatial index over points[first..] for nearest-neighbor
// predicates. Cells are CSR-packed; queries walk Chebyshev rings outward and
// stop once the ring's minimum possible distance exceeds the query radius.
class NeighborGrid {
 public:
  NeighborGrid(const std::vector<Point2D>& pts, std::size_t first, double half_extent,
               double cell)
      : pts_(&pts), half_(half_extent), cell_(cell) {
    n_ = std::max(1, static_cast<int>(std::ceil(2.0 * half_ / cell_)));
    const std::size_t m = pts.size() > first ? pts.size() - first : 0;
    cell_start_.assign(static_cast<std::size_t>(n_) * n_ + 1, 0);
    order_.resize(m);
    for (std::size_t i = first; i < pts.size(); ++i) ++cell_start_[cell_of(pts[i]) + 1];
    for (std::size_t c = 1; c < cell_start_.size(); ++c) cell_start_[c] += cell_start_[c - 1];
    std::vector<int> cursor(cell_start_.begin(), cell_start_.end() - 1);
    for (std::size_t i = first; i < pts.size(); ++i)
      order_[static_cast<std::size_t>(cursor[cell_of(pts[i])]++)] = static_cast<int>(i);
  }

  // True iff some indexed point lies strictly closer than d to p.
  bool any_closer(const Point2D& p, double d) const {
    const double d2 = d * d;
    const int cx = coord(p.x);
    const int cy = coord(p.y);
    for (int ring = 0;; ++ring) {
      if (ring > 0 && (static_cast<double>(ring) - 1.0) * cell_ > d) return false;
      if (ring > 2 * n_) return false;
      const int xlo = cx - ring, xhi = cx + ring, ylo = cy - ring, yhi = cy + ring;
      bool any_cell = false;
      for (int iy = ylo; iy <= yhi; ++iy) {
        if (iy < 0 || iy >= n_) continue;
        for (int ix = xlo; ix <= xhi; ++ix) {
          if (ix < 0 || ix >= n_) continue;
          if (ring > 0 && ix != xlo && ix != xhi && iy != ylo && iy != yhi) continue;
          any_cell = true;
          const std::size_t c = static_cast<std::size_t>(iy) * n_ + ix;
          for (int k = cell_start_[c]; k < cell_start_[c + 1]; ++k) {
            const Point2D& q = (*pts_)[static_cast<std::size_t>(order_[static_cast<std::size_t>(k)])];
            const double dx = q.x - p.x, dy = q.y - p.y;
            if (dx * dx + dy * dy < d2) return true;
          }
        }
      }
      if (!any_cell && ring > n_) return false;
    }
  }

 private:
  int coord(double x) const {
    const int c = static_cast<int>(std::floor((x + half_) / cell_));
    return std::min(std::max(c, 0), n_ - 1);
  }
  std::size_t cell_of(const Point2D& p) const {
    return static_cast<std::size_t>(coord(p.y)) * n_ + coord(p.x);
  }

  const std::vector<Point2D>* pts_;
  double half_, cell_;
  int n_ = 1;
  std::vector<int> cell_start_;
  std::vector<int> order_;
};

Point2D typical_ue_impl(const NeighborGrid& grid, double proposal_radius, RngStream& rng,
                        std::uint64_t budget) {
  for (std::uint64_t t = 0; t < budget; ++t) {
    const double r = proposal_radius * std::sqrt(rng.uniform());
    const double ang = 2.0 * kPi * rng.uniform();
    const Point2D p{r * std::cos(ang), r * std::sin(ang)};
    if (!grid.any_closer(p, r)) return p;
  }
  throw RejectionBudgetExceeded("voronoi_typical_ue: no acceptance within budget");
}

struct PlacementCtx {
  const ModelI* model1 = nullptr;
  bool model2 = false;
  double fixed_delta = 0.0;  // FixedDelta value (or Model II constant)
  int n = 0;                 // 0 encodes no IRS
  double model2_r0_max = 0.0;
};

PlacementCtx make_placement_ctx(const NetworkParams& p, const IrsConfig& irs) {
  PlacementCtx ctx;
  if (irs.n_elements <= 0 || std::holds_alternative<NoIrs>(irs.placement)) return ctx;
  ctx.n = irs.n_elements;
  if (const auto* m1 = std::get_if<ModelI>(&irs.placement)) {
    ctx.model1 = m1;
  } else if (std::holds_alternative<ModelII>(irs.placement)) {
    ctx.model2 = true;
    ctx.fixed_delta = model2_delta(p.lambda, p.q, p.l0, p.eta);
    // Feasibility bound 4/c^2 with c = 2/sqrt(3 E[R0]) collapses to 3 E[R0].
    ctx.model2_r0_max = 3.0 / (2.0 * std::sqrt(p.q * p.lambda));
  } else {
    ctx.fixed_delta = std::get<FixedDelta>(irs.placement).delta;
  }
  return ctx;
}

// Far-field fluctuation std of the Exp(1)-faded shot noise beyond R, without
// the l0^eta path-gain factor (the caller works in l0-factored units).
double tail_fluct_std(double lambda, double eta, double R) {
  return std::sqrt(2.0 * kPi * lambda / (eta - 1.0)) * std::pow(R, 1.0 - eta);
}

// Mean of the same field beyond R (l0-factored units).
double tail_mean(double lambda, double eta, double R) {
  return 2.0 * kPi * lambda / (eta - 2.0) * std::pow(R, 2.0 - eta);
}

// Representative conditional mean interference at the median dominant
// distance; scale reference for the truncation bounds.
double reference_mean_i(const NetworkParams& p) {
  const double rd_med = std::sqrt(kGamma2Median / (kPi * p.q * p.lambda));
  return std::pow(rd_med, -p.eta) + tail_mean(p.lambda, p.eta, rd_med);
}

struct BlockAccum {
  std::uint64_t rejected = 0;
};

// One DistanceModel realization; returns SIR, optionally G.
//
// Two RNG streams per realization: `net` drives everything whose draw count
// does not depend on the IRS configuration (distances, placement angle,
// interferer field), `fad` drives the 2N+1 fading variates. Runs that differ
// only in N or placement therefore see identical interference, which makes
// cross-configuration CCDF differences nearly noise-free under a shared seed.
double realize_distance(const SimConfig& cfg, const PlacementCtx& ctx, RngStream& net,
                        RngStream& fad, BlockAccum& acc, double* g_out) {
  const NetworkParams& p = cfg.params;
  const double piql = kPi * p.q * p.lambda;
  const double half_eta = 0.5 * p.eta;
  const bool eta4 = p.eta == 4.0;

  double r0 = sample_R0(p.lambda, p.q, net);
  if (ctx.model2) {
    while (r0 >= ctx.model2_r0_max) {
      ++acc.rejected;
      r0 = sample_R0(p.lambda, p.q, net);
    }
  }

  const double ang = 2.0 * kPi * net.uniform();  // drawn always, keeps streams aligned
  double delta = 0.0;
  if (ctx.model1) {
    const double r1 = model1_R1(r0, ctx.model1->r2, ang);
    delta = triangle_delta(r0, r1, ctx.model1->r2, p.eta, p.l0);
  } else if (ctx.n > 0) {
    delta = ctx.fixed_delta;
  }

  const double rd = std::sqrt(r0 * r0 + net.exponential() / piql);
  const double rd2 = rd * rd;

  // Path gains in l0-factored units: l0^eta cancels between signal and
  // interference, so it never enters the SIR.
  double interf = net.exponential() * (eta4 ? 1.0 / (rd2 * rd2) : std::pow(rd, -p.eta));

  // Outer radius from the fluctuation bound: beyond r_split the field is
  // replaced by its mean, and r_split is pushed out until the suppressed
  // fluctuation std is below tail_rel_bound of the conditional mean.
  const double m_ref = (eta4 ? 1.0 / (rd2 * rd2) : std::pow(rd, -p.eta)) +
                       tail_mean(p.lambda, p.eta, rd);
  const double bound = cfg.tail_rel_bound * m_ref;
  double r_split =
      std::pow(bound / std::sqrt(2.0 * kPi * p.lambda / (p.eta - 1.0)), 1.0 / (1.0 - p.eta));
  r_split = std::max(r_split, rd);

  const double span = r_split * r_split - rd2;
  if (span > 0.0) {
    const long k = net.poisson(p.lambda * kPi * span);
    for (long i = 0; i < k; ++i) {
      const double rr = rd2 + span * net.uniform();  // area-uniform annulus: r^2 uniform
      interf += net.exponential() * (eta4 ? 1.0 / (rr * rr) : std::pow(rr, -half_eta));
    }
  }
  interf += tail_mean(p.lambda, p.eta, r_split);

  const double gt = sample_tilde_g(ctx.n, delta, cfg.fading, fad);
  if (g_out) *g_out = gt / mean_tilde_g(ctx.n, delta, cfg.fading.mu);

  return std::pow(r0, -p.eta) * gt / interf;
}

// One VoronoiExact realization; same two-stream layout as realize_distance.
double realize_voronoi(const SimConfig& cfg, const PlacementCtx& ctx, double window,
                       double proposal_radius, RngStream& net, RngStream& fad,
                       BlockAccum& acc, double* g_out) {
  const NetworkParams& p = cfg.params;
  const bool eta4 = p.eta == 4.0;
  const double half_eta = 0.5 * p.eta;

  PointSet2D bs = sample_ppp_disk(p.lambda, window, {0.0, 0.0}, net);
  bs.points.insert(bs.points.begin(), Point2D{0.0, 0.0});  // serving BS (Palm point)
  const NeighborGrid grid(bs.points, 1, window, 1.0 / std::sqrt(p.lambda));

  Point2D ue = typical_ue_impl(grid, proposal_radius, net, 1000000);
  double r0 = std::hypot(ue.x, ue.y);
  if (ctx.model2) {
    while (r0 >= ctx.model2_r0_max) {
      ++acc.rejected;
      ue = typical_ue_impl(grid, proposal_radius, net, 1000000);
      r0 = std::hypot(ue.x, ue.y);
    }
  }

  const double ang = 2.0 * kPi * net.uniform();  // drawn always, keeps streams aligned
  double delta = 0.0;
  if (ctx.model1) {
    const Point2D irs{ue.x + ctx.model1->r2 * std::cos(ang),
                      ue.y + ctx.model1->r2 * std::sin(ang)};
    const double r1 = std::hypot(irs.x, irs.y);
    delta = triangle_delta(r0, r1, ctx.model1->r2, p.eta, p.l0);
  } else if (ctx.n > 0) {
    delta = ctx.fixed_delta;
  }

  double interf = 0.0;
  for (std::size_t i = 1; i < bs.points.size(); ++i) {
    const double dx = bs.points[i].x - ue.x;
    const double dy = bs.points[i].y - ue.y;
    const double dd = dx * dx + dy * dy;
    interf += net.exponential() * (eta4 ? 1.0 / (dd * dd) : std::pow(dd, -half_eta));
  }
  // Mean of the field outside the window, seen from the off-center user. At
  // eta = 4 the angular average integrates in closed form to
  // pi lambda W^2 / (W^2 - u^2)^2; other eta fall back to the centered
  // estimate at the worst-case distance W - u.
  const double u2 = ue.x * ue.x + ue.y * ue.y;
  if (eta4) {
    const double w2 = window * window;
    interf += kPi * p.lambda * w2 / ((w2 - u2) * (w2 - u2));
  } else {
    interf += tail_mean(p.lambda, p.eta, std::max(window - std::sqrt(u2), 0.5 * window));
  }

  const double gt = sample_tilde_g(ctx.n, delta, cfg.fading, fad);
  if (g_out) *g_out = gt / mean_tilde_g(ctx.n, delta, cfg.fading.mu);

  return std::pow(r0, -p.eta) * gt / interf;
}

}  // namespace

Point2D voronoi_typical_ue(const PointSet2D& bs, double proposal_radius, RngStream& rng,
                           std::uint64_t budget) {
  if (bs.points.empty()) throw DomainError("voronoi_typical_ue: origin BS required");
  double extent = proposal_radius;
  for (const Point2D& p : bs.points) extent = std::max({extent, std::abs(p.x), std::abs(p.y)});
  double cell = proposal_radius / 8.0;
  if (bs.points.size() > 2)
    cell = std::max(cell, 2.0 * extent / std::sqrt(static_cast<double>(bs.points.size() - 1)));
  const NeighborGrid grid(bs.points, 1, extent, cell);
  return typical_ue_impl(grid, proposal_radius, rng, budget);
}

SimResult simulate_sir(const SimConfig& config, std::size_t n, SimMode mode) {
  if (n < 1) throw ConfigError("simulate_sir: n must be >= 1");
  const NetworkParams& p = config.params;
  if (!(p.eta > 2.0)) throw ConfigError("simulate_sir: eta must exceed 2");
  if (!(p.lambda > 0.0)) throw ConfigError("simulate_sir: lambda must be positive");

  const PlacementCtx ctx = make_placement_ctx(p, config.irs);
  const double window = config.window_factor / std::sqrt(p.lambda);
  const double proposal_radius = window / 3.0;

  double truncation_radius = window;
  if (mode == SimMode::VoronoiExact) {
    // Residual error after mean compensation is the suppressed fluctuation;
    // 0.8 W bounds the user's distance to the window edge from below.
    if (tail_fluct_std(p.lambda, p.eta, 0.8 * window) >
        config.tail_rel_bound * reference_mean_i(p))
      throw WindowTooSmall("simulate_sir: window too small for tail_rel_bound");
  } else {
    const double bound = config.tail_rel_bound * reference_mean_i(p);
    truncation_radius =
        std::pow(bound / std::sqrt(2.0 * kPi * p.lambda / (p.eta - 1.0)), 1.0 / (1.0 - p.eta));
  }

  SimResult result;
  result.sir_samples.assign(n, 0.0);
  if (config.collect_g) result.g_samples.assign(n, 0.0);
  const std::size_t n_blocks = (n + kBlock - 1) / kBlock;
  std::vector<BlockAccum> accums(n_blocks);

  std::atomic<std::size_t> next_block{0};
  std::mutex err_mtx;
  std::exception_ptr first_error;

  auto worker = [&]() {
    for (std::size_t b; (b = next_block.fetch_add(1)) < n_blocks;) {
      try {
        const std::size_t lo = b * kBlock;
        const std::size_t hi = std::min(lo + kBlock, n);
        for (std::size_t i = lo; i < hi; ++i) {
          // Stream ids keyed by realization index: results depend only on
          // (seed, i), never on the block partition or worker count.
          RngStream net(config.seed, 2 * i);
          RngStream fad(config.seed, 2 * i + 1);
          double* g_out = config.collect_g ? &result.g_samples[i] : nullptr;
          result.sir_samples[i] =
              mode == SimMode::VoronoiExact
                  ? realize_voronoi(config, ctx, window, proposal_radius, net, fad,
                                    accums[b], g_out)
                  : realize_distance(config, ctx, net, fad, accums[b], g_out);
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mtx);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };

  unsigned int workers = config.n_workers > 0
                             ? static_cast<unsigned int>(config.n_workers)
                             : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned int>(
      std::min<std::size_t>(workers, n_blocks));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (first_error) std::rethrow_exception(first_error);

  result.meta.seed = config.seed;
  result.meta.n = n;
  result.meta.mode = mode;
  result.meta.truncation_radius = truncation_radius;
  for (const BlockAccum& a : accums) result.meta.rejected_geometry += a.rejected;
  return result;
}

SirCurve empirical_ccdf(const std::vector<double>& samples,
                        const std::vector<double>& theta_grid) {
  if (samples.empty()) throw DomainError("empirical_ccdf: empty sample set");
  std::vector<double> sorted(samples);
  std::sort(sorted.begin(), sorted.end());
  SirCurve curve;
  curve.theta = theta_grid;
  curve.ccdf.reserve(theta_grid.size());
  const double n = static_cast<double>(sorted.size());
  for (double th : theta_grid) {
    const auto it = std::upper_bound(sorted.begin(), sorted.end(), th);
    curve.ccdf.push_back(static_cast<double>(sorted.end() - it) / n);
  }
  return curve;
}

namespace {

// Slope and delta-method relative SE from a sorted sample; shared by the
// public estimator and the adaptive runner.
double slope_impl(const EmpiricalDistribution& dist, const SlopeWindow& w, double* rel_se) {
  const double n = static_cast<double>(dist.size());
  const double k_lo = std::ceil(w.f_lo * n);
  if (k_lo < 100.0)
    throw InsufficientTailMass("diversity_slope: fewer than 100 tail hits",
                               std::log10(100.0 / n));
  const double th_hi = dist.quantile(w.f_hi);
  const double th_lo = dist.quantile(w.f_lo);
  if (!(th_hi > th_lo) || !(th_lo > 0.0))
    throw InsufficientTailMass("diversity_slope: quantiles unresolved",
                               std::log10(k_lo / n));
  const double gap = std::log10(th_hi) - std::log10(th_lo);
  const double slope = (std::log10(w.f_hi) - std::log10(w.f_lo)) / gap;
  if (rel_se) {
    auto sigma_level = [&](double f) {
      const auto k = static_cast<std::size_t>(std::ceil(f * n));
      const std::size_t m = std::max<std::size_t>(3, k / 20);
      const auto& xs = dist.sorted();
      const std::size_t lo = k > m ? k - 1 - m : 0;
      const std::size_t hi = std::min(xs.size() - 1, k - 1 + m);
      const double dlog = std::log10(xs[hi]) - std::log10(xs[lo]);
      if (!(dlog > 0.0)) return std::numeric_limits<double>::infinity();
      const double density = (static_cast<double>(hi - lo) / n) / dlog;  // dF/dlog10(theta)
      return std::sqrt(f * (1.0 - f) / n) / density;
    };
    const double s_hi = sigma_level(w.f_hi);
    const double s_lo = sigma_level(w.f_lo);
    *rel_se = std::sqrt(s_hi * s_hi + s_lo * s_lo) / gap;
  }
  return slope;
}

}  // namespace

double diversity_slope(const std::vector<double>& sir_samples, const SlopeWindow& window) {
  const EmpiricalDistribution dist(sir_samples);
  return slope_impl(dist, window, nullptr);
}

DiversityRun estimate_diversity(const SimConfig& config, SimMode mode,
                                const SlopeWindow& window, double target_rel_se,
                                const std::vector<std::size_t>& ladder) {
  if (ladder.empty()) throw DomainError("estimate_diversity: empty ladder");
  DiversityRun run;
  for (std::size_t i = 0; i < ladder.size(); ++i) {
    SimResult res = simulate_sir(config, ladder[i], mode);
    const EmpiricalDistribution dist(std::move(res.sir_samples));
    try {
      run.slope = slope_impl(dist, window, &run.rel_se);
    } catch (const InsufficientTailMass&) {
      if (i + 1 == ladder.size()) throw;
      continue;
    }
    run.n_used = ladder[i];
    if (run.rel_se <= target_rel_se) return run;
  }
  return run;
}

}  // namespace netgeo
