#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "pnc/bounds.hpp"
#include "pnc/errors.hpp"
#include "pnc/report_io.hpp"
#include "pnc/rng.hpp"
#include "pnc_tools/experiment.hpp"

namespace {

using namespace pnc;
using tools::ExperimentSpec;

void emit(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + out);
  f << text;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

// Flags shared by the commands that take an experiment spec.
struct SpecFlags {
  std::string config;
  std::string preset;
  std::vector<std::string> schemes;
  std::vector<double> snr;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> trials;
  std::optional<std::uint64_t> errors;
  std::optional<double> k_factor;
  std::optional<int> order;
  std::optional<int> workers;

  void attach(CLI::App* cmd) {
    cmd->add_option("--config", config, "Experiment config (JSON)");
    cmd->add_option("--preset", preset, "Built-in experiment")->check(CLI::IsMember({"fig5"}));
    cmd->add_option("--scheme", schemes, "Scheme name (repeatable)");
    cmd->add_option("--snr", snr, "SNR points in dB");
    cmd->add_option("--seed", seed, "Master seed (overrides PNC_SEED and config)");
    cmd->add_option("--trials", trials, "Trial cap per SNR point");
    cmd->add_option("--errors", errors, "Union-error target per SNR point");
    cmd->add_option("-K,--k-factor", k_factor, "Rician factor");
    cmd->add_option("-M,--order", order, "PSK order");
    cmd->add_option("-j,--workers", workers, "Worker threads");
  }

  ExperimentSpec resolve() const {
    ExperimentSpec spec = preset == "fig5" ? tools::fig5_preset() : ExperimentSpec{};
    if (spec.snr_db.empty()) spec.snr_db = tools::snr_grid(0.0, 45.0, 2.5);
    if (spec.schemes.empty()) spec.schemes.assign(all_schemes().begin(), all_schemes().end());
    if (!config.empty()) spec = tools::load_spec(config, spec);
    if (auto env = seed_from_env()) spec.seed = *env;
    if (seed) spec.seed = *seed;
    if (!schemes.empty()) {
      spec.schemes.clear();
      for (const auto& s : schemes) spec.schemes.push_back(tools::scheme_from_name(s));
    }
    if (!snr.empty()) spec.snr_db = snr;
    if (trials) spec.max_trials = *trials;
    if (errors) spec.target_errors = *errors;
    if (k_factor) spec.k_factor = *k_factor;
    if (order) spec.order = *order;
    if (workers) spec.workers = *workers;
    tools::validate(spec);
    return spec;
  }
};

RelayPolicy adaptive_policy(const std::string& scheme, int order) {
  const Scheme s = tools::scheme_from_name(scheme);
  if (!is_adaptive(s)) throw InvalidArgument("scheme '" + scheme + "' has no map library");
  return make_policy(s, Constellation::psk(order));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Adaptive physical-layer network coding on the two-way Rician relay channel"};
  app.require_subcommand(1);
  std::string out;
  app.add_option("-o,--out", out, "Output file, or directory for 'run' (default: stdout)");

  int order = 4;
  std::string scheme = "adaptive-all";

  auto* singular = app.add_subcommand("singular", "Singular fade states and dominance factors (CSV)");
  bool dominant = false;
  singular->add_option("-M,--order", order, "PSK order");
  singular->add_flag("--dominant", dominant, "Only the dominant state(s) on each circle");

  auto* maps = app.add_subcommand("maps", "Map catalogue of an adaptive scheme (JSON)");
  maps->add_option("-M,--order", order, "PSK order");
  maps->add_option("--scheme", scheme, "Adaptive scheme");

  auto* quantize = app.add_subcommand("quantize", "Fade-plane raster of selected maps (CSV)");
  int resolution = 501;
  double extent = 2.5;
  int workers = 1;
  quantize->add_option("-M,--order", order, "PSK order");
  quantize->add_option("--scheme", scheme, "Adaptive scheme");
  quantize->add_option("--resolution", resolution, "Samples per axis")->check(CLI::PositiveNumber);
  quantize->add_option("--extent", extent, "Half-width of the square window")->check(CLI::PositiveNumber);
  quantize->add_option("-j,--workers", workers, "Worker threads")->check(CLI::PositiveNumber);

  auto* delta = app.add_subcommand("delta", "Removal-circle radius per singular state (CSV)");
  int angular = 360;
  double tol = 1e-3;
  delta->add_option("-M,--order", order, "PSK order");
  delta->add_option("--scheme", scheme, "Adaptive scheme");
  delta->add_option("--angular", angular, "Probe points per circle")->check(CLI::PositiveNumber);
  delta->add_option("--tol", tol, "Relative radius tolerance")->check(CLI::PositiveNumber);

  SpecFlags sim_flags, bound_flags, run_flags;
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo end-to-end SER sweep (CSV)");
  sim_flags.attach(simulate);
  auto* bounds = app.add_subcommand("bounds", "Union bound per scheme and SNR (CSV)");
  bound_flags.attach(bounds);
  auto* run = app.add_subcommand("run", "Full experiment: SER, bounds and summary into --out");
  run_flags.attach(run);

  auto* report = app.add_subcommand("report", "Gains and slopes from simulation CSV files (JSON)");
  std::vector<std::string> inputs;
  std::string reference = "fixed-modulo";
  double rate = 1e-4;
  report->add_option("inputs", inputs, "Simulation CSV files")->required()->check(CLI::ExistingFile);
  report->add_option("--reference", reference, "Reference scheme");
  report->add_option("--rate", rate, "Target error rate");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Help exits 0; every other usage error shares the config-error status.
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*singular) {
      auto states = enumerate_singular_states(Constellation::psk(order));
      if (dominant) states = select_dominant(states);
      emit(singular_csv(states), out);
    } else if (*maps) {
      emit(map_catalog_json(*adaptive_policy(scheme, order).library()), out);
    } else if (*quantize) {
      const auto policy = adaptive_policy(scheme, order);
      const Range r{-extent, extent};
      emit(raster_csv(classify_grid(*policy.library(), r, r, resolution, workers)), out);
    } else if (*delta) {
      const auto policy = adaptive_policy(scheme, order);
      std::vector<DeltaEstimate> rows;
      for (const auto& s : effective_removed_states(policy))
        rows.push_back(estimate_delta(*policy.library(), s, angular, tol));
      emit(delta_csv(rows), out);
    } else if (*simulate) {
      const ExperimentSpec spec = sim_flags.resolve();
      const Constellation c = Constellation::psk(spec.order);
      std::string text = ser_csv_header();
      for (Scheme s : spec.schemes) {
        const auto rows = simulate_ser(tools::simulation_config(spec, s), make_policy(s, c));
        text += ser_csv_rows(to_string(s), rows);
      }
      emit(text, out);
    } else if (*bounds) {
      const ExperimentSpec spec = bound_flags.resolve();
      const Constellation c = Constellation::psk(spec.order);
      std::string text = bound_csv_header();
      for (Scheme s : spec.schemes) {
        const auto scenario = make_bound_scenario(make_policy(s, c), spec.angular_samples, spec.radius_tol);
        for (double snr_db : spec.snr_db) {
          const auto r = end_to_end_bound(c, scenario, spec.k_factor, std::pow(10.0, snr_db / 10.0));
          text += bound_csv_row(to_string(s), snr_db, r);
        }
      }
      emit(text, out);
    } else if (*run) {
      ExperimentSpec spec = run_flags.resolve();
      if (!out.empty()) spec.out_dir = out;
      const auto summary = tools::run_experiment(spec);
      std::cout << summary.dump(2) << "\n";
    } else if (*report) {
      std::vector<tools::SchemeCurves> curves;
      for (Scheme s : all_schemes()) {
        std::vector<SerEstimate> rows;
        for (const auto& path : inputs) {
          auto part = parse_ser_csv(read_file(path), to_string(s));
          rows.insert(rows.end(), part.begin(), part.end());
        }
        if (!rows.empty()) curves.push_back({s, std::move(rows)});
      }
      if (curves.empty()) throw InvalidArgument("no simulation rows found");
      emit(tools::summarize(curves, tools::scheme_from_name(reference), rate).dump(2) + "\n", out);
    }
  } catch (const tools::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const ConstructionInfeasible& e) {
    std::cerr << "map construction infeasible: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
