#include "pnc_tools/experiment.hpp"

#include <cmath>
#include <fstream>

#include "pnc/bounds.hpp"
#include "pnc/errors.hpp"
#include "pnc/report_io.hpp"

namespace pnc::tools {

Scheme scheme_from_name(std::string_view name) {
  try {
    return parse_scheme(name);
  } catch (const InvalidArgument& e) {
    throw ConfigError(e.what());
  }
}
namespace {

template <typename T>
T get(const nlohmann::json& j, const char* key, T fallback) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("field '") + key + "': " + e.what());
  }
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

nlohmann::json optional_json(const std::optional<double>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json();
}

}  // namespace

ExperimentSpec fig5_preset() {
  ExperimentSpec spec;
  spec.snr_db = snr_grid(0.0, 45.0, 2.5);
  spec.schemes.assign(all_schemes().begin(), all_schemes().end());
  return spec;
}

std::vector<double> snr_grid(double start, double stop, double step) {
  if (!(step > 0.0)) throw ConfigError("SNR step must be positive");
  std::vector<double> out;
  const auto n = static_cast<long>(std::floor((stop - start) / step + 1e-9));
  for (long i = 0; i <= n; ++i) out.push_back(start + static_cast<double>(i) * step);
  return out;
}

ExperimentSpec parse_spec(const nlohmann::json& j, ExperimentSpec base) {
  if (!j.is_object()) throw ConfigError("experiment config must be a JSON object");
  base.order = get(j, "order", base.order);
  base.k_factor = get(j, "k_factor", base.k_factor);
  if (j.contains("snr_db")) {
    const auto& s = j.at("snr_db");
    if (s.is_array()) {
      base.snr_db = get<std::vector<double>>(j, "snr_db", {});
    } else if (s.is_object()) {
      base.snr_db = snr_grid(get(s, "start", 0.0), get(s, "stop", 0.0), get(s, "step", 0.0));
    } else {
      throw ConfigError("field 'snr_db' must be a list or {start, stop, step}");
    }
  }
  if (j.contains("schemes")) {
    base.schemes.clear();
    for (const auto& name : get<std::vector<std::string>>(j, "schemes", {})) {
      base.schemes.push_back(scheme_from_name(name));
    }
  }
  base.max_trials = get(j, "max_trials", base.max_trials);
  base.target_errors = get(j, "target_errors", base.target_errors);
  base.seed = get(j, "seed", base.seed);
  base.workers = get(j, "workers", base.workers);
  if (j.contains("out")) base.out_dir = get<std::string>(j, "out", {});
  base.target_rate = get(j, "target_rate", base.target_rate);
  if (j.contains("reference")) {
    base.reference = scheme_from_name(get<std::string>(j, "reference", {}));
  }
  base.angular_samples = get(j, "angular_samples", base.angular_samples);
  base.radius_tol = get(j, "radius_tol", base.radius_tol);
  return base;
}

ExperimentSpec load_spec(const std::filesystem::path& path, ExperimentSpec base) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
  return parse_spec(j, std::move(base));
}

void validate(const ExperimentSpec& spec) {
  if (spec.order != 2 && spec.order != 4 && spec.order != 8 && spec.order != 16) {
    throw ConfigError("order must be one of 2, 4, 8, 16");
  }
  if (!(spec.k_factor >= 0.0)) throw ConfigError("k_factor must be non-negative");
  if (spec.snr_db.empty()) throw ConfigError("SNR grid is empty");
  for (std::size_t i = 1; i < spec.snr_db.size(); ++i) {
    if (!(spec.snr_db[i] > spec.snr_db[i - 1])) throw ConfigError("SNR grid must be strictly increasing");
  }
  if (spec.schemes.empty()) throw ConfigError("scheme list is empty");
  if (spec.max_trials == 0) throw ConfigError("max_trials must be positive");
  if (spec.target_errors == 0) throw ConfigError("target_errors must be positive");
  if (spec.workers < 1) throw ConfigError("workers must be at least 1");
  if (!(spec.target_rate > 0.0 && spec.target_rate < 1.0)) throw ConfigError("target_rate must lie in (0, 1)");
  if (spec.angular_samples < 1) throw ConfigError("angular_samples must be positive");
  if (!(spec.radius_tol > 0.0)) throw ConfigError("radius_tol must be positive");
}

SimulationConfig simulation_config(const ExperimentSpec& spec, Scheme scheme) {
  SimulationConfig cfg;
  cfg.scheme = scheme;
  cfg.order = spec.order;
  cfg.k_factor = spec.k_factor;
  cfg.snr_db = spec.snr_db;
  cfg.max_trials = spec.max_trials;
  cfg.target_errors = spec.target_errors;
  cfg.seed = spec.seed;
  cfg.workers = spec.workers;
  return cfg;
}

std::vector<CurvePoint> ser_curve(const std::vector<SerEstimate>& rows) {
  std::vector<CurvePoint> out;
  for (const auto& r : rows) out.push_back({r.snr_db, r.ser});
  return out;
}

std::vector<CurvePoint> ber_curve(const std::vector<SerEstimate>& rows) {
  std::vector<CurvePoint> out;
  for (const auto& r : rows) out.push_back({r.snr_db, r.ber});
  return out;
}

nlohmann::json summarize(const std::vector<SchemeCurves>& curves, Scheme reference,
                         double target_rate) {
  nlohmann::json out;
  out["reference"] = std::string(to_string(reference));
  out["target_rate"] = target_rate;
  out["schemes"] = nlohmann::json::object();
  const SchemeCurves* ref = nullptr;
  for (const auto& c : curves)
    if (c.scheme == reference) ref = &c;

  for (const auto& c : curves) {
    nlohmann::json e;
    const auto ser = ser_curve(c.ser);
    const auto ber = ber_curve(c.ser);
    e["ser_slope"] = optional_json(top_slope(ser, 20.0));
    e["ber_slope"] = optional_json(top_slope(ber, 20.0));
    e["ser_snr_at_target"] = optional_json(snr_at_rate(ser, target_rate));
    e["ber_snr_at_target"] = optional_json(snr_at_rate(ber, target_rate));
    if (ref != nullptr) {
      e["ser_gain_db"] = optional_json(extract_gain(ser, ser_curve(ref->ser), target_rate).gain_db);
      e["ber_gain_db"] = optional_json(extract_gain(ber, ber_curve(ref->ser), target_rate).gain_db);
    }
    out["schemes"][std::string(to_string(c.scheme))] = e;
  }
  return out;
}

nlohmann::json run_experiment(const ExperimentSpec& spec) {
  validate(spec);
  std::filesystem::create_directories(spec.out_dir);
  const Constellation c = Constellation::psk(spec.order);

  std::vector<SchemeCurves> curves;
  for (Scheme scheme : spec.schemes) {
    const std::string name(to_string(scheme));
    RelayPolicy policy = [&] {
      try {
        return make_policy(scheme, c);
      } catch (const ConstructionInfeasible& e) {
        throw ConstructionInfeasible("scheme " + name + ": " + e.what());
      }
    }();
    auto rows = simulate_ser(simulation_config(spec, scheme), policy);
    write_file(spec.out_dir / (name + "_ser.csv"), ser_csv_header() + ser_csv_rows(name, rows));

    const BoundScenario scenario = make_bound_scenario(policy, spec.angular_samples, spec.radius_tol);
    std::string bounds = bound_csv_header();
    for (double snr_db : spec.snr_db) {
      const double snr = std::pow(10.0, snr_db / 10.0);
      bounds += bound_csv_row(name, snr_db, end_to_end_bound(c, scenario, spec.k_factor, snr));
    }
    write_file(spec.out_dir / (name + "_bounds.csv"), bounds);
    curves.push_back({scheme, std::move(rows)});
  }

  nlohmann::json summary = summarize(curves, spec.reference, spec.target_rate);
  summary["order"] = spec.order;
  summary["k_factor"] = spec.k_factor;
  summary["seed"] = spec.seed;
  write_file(spec.out_dir / "summary.json", summary.dump(2) + "\n");
  return summary;
}

}  // namespace pnc::tools
