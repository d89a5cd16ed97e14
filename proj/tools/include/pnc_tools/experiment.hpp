#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pnc/gain.hpp"
#include "pnc/scheme.hpp"
#include "pnc/simulation.hpp"

namespace pnc::tools {

/// Malformed or inconsistent experiment configuration.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// parse_scheme for user input: unknown names are a ConfigError.
Scheme scheme_from_name(std::string_view name);

struct ExperimentSpec {
  int order = 4;
  double k_factor = 4.0;
  std::vector<double> snr_db;
  std::vector<Scheme> schemes;
  std::uint64_t max_trials = 100'000'000;
  std::uint64_t target_errors = 200;
  std::uint64_t seed = 1;
  int workers = 1;
  std::filesystem::path out_dir = "pnc-out";
  double target_rate = 1e-4;
  Scheme reference = Scheme::FixedModulo;
  int angular_samples = 360;
  double radius_tol = 1e-3;
};

/// 4-PSK, K=4, 0-45 dB in 2.5 dB steps, every scheme.
ExperimentSpec fig5_preset();

/// SNR list from start, stop (inclusive) and step.
std::vector<double> snr_grid(double start, double stop, double step);

/// Overlays the fields present in `j` onto `base`. "snr_db" may be a list or
/// {"start", "stop", "step"}.
ExperimentSpec parse_spec(const nlohmann::json& j, ExperimentSpec base = {});
ExperimentSpec load_spec(const std::filesystem::path& path, ExperimentSpec base = {});

/// Throws ConfigError unless the grid is strictly increasing and non-empty,
/// the scheme list is non-empty, and the numeric settings are in range.
void validate(const ExperimentSpec& spec);

SimulationConfig simulation_config(const ExperimentSpec& spec, Scheme scheme);

struct SchemeCurves {
  Scheme scheme;
  std::vector<SerEstimate> ser;
};

std::vector<CurvePoint> ser_curve(const std::vector<SerEstimate>& rows);
std::vector<CurvePoint> ber_curve(const std::vector<SerEstimate>& rows);

/// Slopes per scheme and gains of every scheme over `reference`, on both the
/// symbol-error and the bit-error curves.
nlohmann::json summarize(const std::vector<SchemeCurves>& curves, Scheme reference,
                         double target_rate);

/// Simulation CSV, bound CSV per scheme plus summary.json under out_dir.
/// Returns the summary.
nlohmann::json run_experiment(const ExperimentSpec& spec);

}  // namespace pnc::tools
