#pragma once

#include <optional>
#include <span>
#include <string>

namespace pnc {

struct CurvePoint {
  double snr_db = 0.0;
  double rate = 0.0;
};

/// SNR (dB) where the curve first crosses `rate`, by linear interpolation of
/// log10(rate) in dB. Empty when no segment brackets the rate.
std::optional<double> snr_at_rate(std::span<const CurvePoint> curve, double rate);

/// Least-squares slope of log10(rate) against snr_db/10 over points in
/// [lo_db, hi_db] with positive rate. Empty with fewer than two points.
std::optional<double> fit_slope(std::span<const CurvePoint> curve, double lo_db, double hi_db);

/// fit_slope over the top `span_db` dB of the curve's positive-rate points.
std::optional<double> top_slope(std::span<const CurvePoint> curve, double span_db = 10.0);

struct GainReport {
  std::string reference;
  std::string target;
  double target_rate = 0.0;
  /// reference SNR minus target SNR at target_rate; empty if either curve
  /// fails to bracket the rate.
  std::optional<double> gain_db;
  std::optional<double> reference_snr_db;
  std::optional<double> target_snr_db;
  std::optional<double> reference_slope;
  std::optional<double> target_slope;
};

/// Horizontal gap between two error-rate curves: how much less SNR `target`
/// needs than `reference` to reach `rate`.
GainReport extract_gain(std::span<const CurvePoint> target, std::span<const CurvePoint> reference,
                        double rate);

}  // namespace pnc
