// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 irs-netgeo contributors
//
// Command-line experiment runner. Scenario name first, then flags; an
// optional JSON config file supplies defaults that explicit flags override.
// Exit codes: 0 success, 1 runtime failure, 2 bad configuration,
// 3 numerical non-convergence, 4 insufficient deep-tail sample mass.

#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "netgeo/errors.hpp"
#include "netgeo/experiment.hpp"

namespace {

using netgeo::ConfigError;
using netgeo::ExperimentConfig;
using netgeo::Route;
using netgeo::Scenario;

const std::map<std::string, Scenario> kScenarios = {
    {"g-cdf", Scenario::GCdf},         {"g-variance", Scenario::GVariance},
    {"sir-ccdf", Scenario::SirCcdf},   {"throughput", Scenario::Throughput},
    {"delta-stats", Scenario::DeltaStats}, {"diversity", Scenario::Diversity},
    {"reproduce", Scenario::Reproduce}};

std::vector<double> parse_theta_spec(const std::string& spec) {
  double lo = 0.0, hi = 0.0, step = 0.0;
  char sep1 = 0, sep2 = 0;
  std::istringstream in(spec);
  if (!(in >> lo >> sep1 >> hi >> sep2 >> step) || sep1 != ':' || sep2 != ':' ||
      !in.eof())
    throw ConfigError("--theta-db expects lo:hi:step, got '" + spec + "'");
  auto grid = netgeo::theta_grid_db(lo, hi, step);
  if (grid.empty()) throw ConfigError("--theta-db '" + spec + "' produces an empty grid");
  return grid;
}

std::vector<Route> parse_routes(const std::string& spec) {
  std::vector<Route> routes;
  std::istringstream in(spec);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok == "erlang") routes.push_back(Route::ErlangToeplitz);
    else if (tok == "exp") routes.push_back(Route::ExpApprox);
    else if (tok == "noirs") routes.push_back(Route::NoIrs);
    else throw ConfigError("unknown route '" + tok + "' (use erlang, exp, noirs)");
  }
  if (routes.empty()) throw ConfigError("--routes list is empty");
  return routes;
}

// Applies a flat JSON object onto the config. Unknown keys are rejected so
// typos fail loudly instead of silently running the defaults.
void apply_config_file(ExperimentConfig& cfg, std::string& model, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ConfigError(std::string("config file is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config file must hold a JSON object");
  for (const auto& [key, val] : j.items()) {
    if (key == "scenario") {
      const auto it = kScenarios.find(val.get<std::string>());
      if (it == kScenarios.end())
        throw ConfigError("unknown scenario in config file: " + val.get<std::string>());
      cfg.scenario = it->second;
    } else if (key == "preset") cfg.preset = val.get<std::string>();
    else if (key == "lambda") cfg.params.lambda = val.get<double>();
    else if (key == "eta") cfg.params.eta = val.get<double>();
    else if (key == "l0") cfg.params.l0 = val.get<double>();
    else if (key == "mu") cfg.fading.mu = val.get<double>();
    else if (key == "n_elements") cfg.irs.n_elements = val.get<int>();
    else if (key == "model") model = val.get<std::string>();
    else if (key == "r2") cfg.irs.placement = netgeo::ModelI{val.get<double>()};
    else if (key == "delta") cfg.irs.placement = netgeo::FixedDelta{val.get<double>()};
    else if (key == "theta_db") cfg.theta_grid_db = parse_theta_spec(val.get<std::string>());
    else if (key == "samples") cfg.n_samples = val.get<std::size_t>();
    else if (key == "seed") cfg.seed = val.get<std::uint64_t>();
    else if (key == "routes") cfg.routes = parse_routes(val.get<std::string>());
    else if (key == "mode") {
      const std::string m = val.get<std::string>();
      if (m == "distance") cfg.mode = netgeo::SimMode::DistanceModel;
      else if (m == "voronoi") cfg.mode = netgeo::SimMode::VoronoiExact;
      else throw ConfigError("unknown mode in config file: " + m);
    } else if (key == "mc") cfg.with_mc = val.get<bool>();
    else if (key == "log_base") cfg.log_base = val.get<double>();
    else if (key == "workers") cfg.n_workers = val.get<int>();
    else if (key == "out") cfg.output_path = val.get<std::string>();
    else throw ConfigError("unknown config file key: " + key);
  }
}

int run_cli(int argc, char** argv) {
  CLI::App app{"IRS-assisted cellular network SIR analysis"};
  app.get_formatter()->column_width(30);

  std::string scenario_name;
  app.add_option("scenario", scenario_name, "One of: " + [] {
       std::string s;
       for (const auto& [k, v] : kScenarios) {
         (void)v;
         if (!s.empty()) s += ", ";
         s += k;
       }
       return s;
     }())
      ->required();
  std::string preset;
  app.add_option("preset", preset, "Figure preset for the reproduce scenario (fig2..fig13)");

  std::string config_path;
  app.add_option("--config", config_path, "JSON config file; explicit flags override it");

  double lambda = 0.0, eta = 0.0, l0 = 0.0, mu = 0.0, r2 = 0.0, delta = 0.0,
         log_base = 0.0;
  int n_elements = 0, workers = 0;
  std::uint64_t samples = 0, seed = 0;
  std::string model, theta_spec, routes_spec, mode_name, out_path;
  bool no_mc = false;

  auto* o_lambda = app.add_option("--lambda", lambda, "BS density (1/m^2)");
  auto* o_eta = app.add_option("--eta", eta, "Path-loss exponent (> 2)");
  auto* o_l0 = app.add_option("--l0", l0, "Path-loss reference distance (m)");
  auto* o_mu = app.add_option("--mu", mu, "Nakagami shape (1 = Rayleigh)");
  auto* o_n = app.add_option("--n-elements", n_elements, "IRS element count N");
  auto* o_model =
      app.add_option("--model", model, "IRS placement: 1, 2, fixed, or none")
          ->check(CLI::IsMember({"1", "2", "fixed", "none"}));
  auto* o_r2 = app.add_option("--r2", r2, "Model 1 IRS-UE distance (m)");
  auto* o_delta = app.add_option("--delta", delta, "Fixed triangle parameter");
  auto* o_theta = app.add_option("--theta-db", theta_spec, "Threshold grid lo:hi:step in dB");
  auto* o_samples = app.add_option("--samples", samples, "Monte Carlo realizations");
  auto* o_seed = app.add_option("--seed", seed, "RNG seed");
  auto* o_routes =
      app.add_option("--routes", routes_spec, "Analytic routes, comma list of erlang,exp,noirs");
  auto* o_mode = app.add_option("--mode", mode_name, "Simulation mode: distance or voronoi")
                     ->check(CLI::IsMember({"distance", "voronoi"}));
  auto* o_nomc = app.add_flag("--no-mc", no_mc, "Skip the Monte Carlo column");
  auto* o_logb =
      app.add_option("--log-base", log_base, "Throughput logarithm base (default: natural)");
  auto* o_workers = app.add_option("--workers", workers, "Worker threads (0 = all cores)");
  auto* o_out = app.add_option("--out", out_path, "Output CSV path (sidecar: <out>.meta.json)");

  CLI11_PARSE(app, argc, argv);

  ExperimentConfig cfg = netgeo::default_config();
  std::string model_name;  // placement chosen by file/flags, applied last
  if (!config_path.empty()) apply_config_file(cfg, model_name, config_path);

  const auto it = kScenarios.find(scenario_name);
  if (it == kScenarios.end()) throw ConfigError("unknown scenario: " + scenario_name);
  cfg.scenario = it->second;
  if (!preset.empty()) cfg.preset = preset;

  if (o_lambda->count()) cfg.params.lambda = lambda;
  if (o_eta->count()) cfg.params.eta = eta;
  if (o_l0->count()) cfg.params.l0 = l0;
  if (o_mu->count()) cfg.fading.mu = mu;
  if (o_n->count()) cfg.irs.n_elements = n_elements;
  if (o_model->count()) model_name = model;
  if (o_theta->count()) cfg.theta_grid_db = parse_theta_spec(theta_spec);
  if (o_samples->count()) cfg.n_samples = samples;
  if (o_seed->count()) cfg.seed = seed;
  if (o_routes->count()) cfg.routes = parse_routes(routes_spec);
  if (o_mode->count())
    cfg.mode = mode_name == "voronoi" ? netgeo::SimMode::VoronoiExact
                                      : netgeo::SimMode::DistanceModel;
  if (o_nomc->count()) cfg.with_mc = false;
  if (o_logb->count()) cfg.log_base = log_base;
  if (o_workers->count()) cfg.n_workers = workers;
  if (o_out->count()) cfg.output_path = out_path;

  // Placement resolution: --model picks the family; --r2 / --delta fill it in.
  // With no --model, --r2 or --delta switch the family implicitly. The Model 1
  // default r2 = 1/(60 sqrt(lambda)) tracks an overridden lambda.
  if (model_name == "1" ||
      (model_name.empty() && o_r2->count() && !std::get_if<netgeo::ModelI>(&cfg.irs.placement))) {
    cfg.irs.placement = netgeo::ModelI{1.0 / (60.0 * std::sqrt(cfg.params.lambda))};
  } else if (model_name == "2") {
    cfg.irs.placement = netgeo::ModelII{};
  } else if (model_name == "fixed") {
    cfg.irs.placement = netgeo::FixedDelta{0.0};
  } else if (model_name == "none") {
    cfg.irs.placement = netgeo::NoIrs{};
    cfg.irs.n_elements = 0;
  } else if (model_name.empty() && o_lambda->count() && !o_r2->count()) {
    if (std::get_if<netgeo::ModelI>(&cfg.irs.placement))
      cfg.irs.placement = netgeo::ModelI{1.0 / (60.0 * std::sqrt(cfg.params.lambda))};
  }
  if (o_r2->count()) {
    if (auto* m1 = std::get_if<netgeo::ModelI>(&cfg.irs.placement)) m1->r2 = r2;
    else throw ConfigError("--r2 applies only to the Model 1 placement");
  }
  if (o_delta->count()) {
    if (std::get_if<netgeo::FixedDelta>(&cfg.irs.placement) || model_name.empty())
      cfg.irs.placement = netgeo::FixedDelta{delta};
    else throw ConfigError("--delta applies only to the fixed placement");
  }

  const netgeo::ResultTable table = netgeo::run(cfg);
  if (cfg.output_path.empty()) {
    // No --out: emit the CSV body to stdout so the tool is pipeline-friendly.
    std::ostringstream head;
    for (std::size_t c = 0; c < table.columns.size(); ++c)
      head << (c ? "," : "") << table.columns[c];
    std::cout << head.str() << '\n';
    char buf[40];
    for (const auto& row : table.rows) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        std::snprintf(buf, sizeof(buf), "%.17g", row[c]);
        std::cout << (c ? "," : "") << buf;
      }
      std::cout << '\n';
    }
  } else {
    std::cerr << "wrote " << cfg.output_path << " (" << table.rows.size() << " rows) and "
              << cfg.output_path << ".meta.json\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run_cli(argc, argv);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const netgeo::NonConvergence& e) {
    std::cerr << "non-convergence: " << e.what() << '\n';
    return 3;
  } catch (const netgeo::InsufficientTailMass& e) {
    std::cerr << "insufficient tail mass: " << e.what()
              << " (achievable depth log10 F = " << e.achieved_depth_log10 << ")\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
