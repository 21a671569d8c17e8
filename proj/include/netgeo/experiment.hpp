// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 irs-netgeo contributors
//
// Scenario runner behind the CLI: assembles simulation and analytic curves
// into flat result tables, with figure-reproduction presets and CSV / JSON
// sidecar emission. Tables are deterministic for a given config and seed;
// wall-clock provenance lives only in the sidecar metadata.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "netgeo/montecarlo.hpp"
#include "netgeo/sir.hpp"

namespace netgeo {

enum class Scenario { GCdf, GVariance, SirCcdf, Throughput, DeltaStats, Diversity, Reproduce };

struct ExperimentConfig {
  Scenario scenario = Scenario::SirCcdf;
  std::string preset;  // reproduce target: fig2..fig13
  NetworkParams params;
  IrsConfig irs;
  FadingSpec fading;
  std::vector<double> theta_grid_db;  // empty -> -10:25 in 0.5 dB steps
  std::size_t n_samples = 100000;
  std::uint64_t seed = 1;
  std::vector<Route> routes = {Route::ErlangToeplitz, Route::ExpApprox};
  bool with_mc = true;
  SimMode mode = SimMode::DistanceModel;
  double log_base = 0.0;  // throughput: <= 0 means natural log
  int n_workers = 0;
  std::string output_path;  // empty -> no files written
};

struct ResultTable {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;  // each row matches columns
  std::string notes_json = "{}";          // scenario diagnostics (KS, gains, counts, ...)

  void add_row(std::initializer_list<double> vals) { rows.emplace_back(vals); }
};

// Default configuration mirrors the evaluation setup: lambda = 1e-5 /m^2,
// eta = 4, l0 = 1, q = 9/7, Model I IRS at r2 = 1/(60 sqrt(lambda)), 1e5 runs.
ExperimentConfig default_config();

// Canonical dB threshold grid a:b:step (inclusive endpoints within half-step).
std::vector<double> theta_grid_db(double lo_db, double hi_db, double step_db);

ResultTable run(const ExperimentConfig& config);

// CSV with header row, '.' decimal separator, %.17g round-trip floats;
// written atomically (temp file + rename). A JSON sidecar at
// path + ".meta.json" carries config echo, provenance, and notes_json.
void write_outputs(const ResultTable& table, const ExperimentConfig& config,
                   const std::string& path);

}  // namespace netgeo
