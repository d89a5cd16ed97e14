#include "pnc/gain.hpp"

#include <cmath>
#include <vector>

namespace pnc {
namespace {

std::vector<CurvePoint> positive(std::span<const CurvePoint> curve) {
  std::vector<CurvePoint> out;
  for (const auto& p : curve)
    if (p.rate > 0.0 && std::isfinite(p.rate)) out.push_back(p);
  return out;
}

}  // namespace

std::optional<double> snr_at_rate(std::span<const CurvePoint> curve, double rate) {
  if (!(rate > 0.0)) return std::nullopt;
  const auto pts = positive(curve);
  const double target = std::log10(rate);
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const double y0 = std::log10(pts[i].rate);
    const double y1 = std::log10(pts[i + 1].rate);
    if (y0 == target) return pts[i].snr_db;
    if ((y0 - target) * (y1 - target) < 0.0 || y1 == target) {
      const double t = (target - y0) / (y1 - y0);
      return pts[i].snr_db + t * (pts[i + 1].snr_db - pts[i].snr_db);
    }
  }
  if (pts.size() == 1 && pts[0].rate == rate) return pts[0].snr_db;
  return std::nullopt;
}

std::optional<double> fit_slope(std::span<const CurvePoint> curve, double lo_db, double hi_db) {
  double n = 0, sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& p : positive(curve)) {
    if (p.snr_db < lo_db || p.snr_db > hi_db) continue;
    const double x = p.snr_db / 10.0;
    const double y = std::log10(p.rate);
    n += 1;
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double den = n * sxx - sx * sx;
  if (n < 2 || den <= 0.0) return std::nullopt;
  return (n * sxy - sx * sy) / den;
}

std::optional<double> top_slope(std::span<const CurvePoint> curve, double span_db) {
  const auto pts = positive(curve);
  if (pts.empty()) return std::nullopt;
  double hi = pts.front().snr_db;
  for (const auto& p : pts) hi = std::max(hi, p.snr_db);
  return fit_slope(pts, hi - span_db, hi);
}

GainReport extract_gain(std::span<const CurvePoint> target, std::span<const CurvePoint> reference,
                        double rate) {
  GainReport out;
  out.target_rate = rate;
  out.target_snr_db = snr_at_rate(target, rate);
  out.reference_snr_db = snr_at_rate(reference, rate);
  if (out.target_snr_db && out.reference_snr_db) {
    out.gain_db = *out.reference_snr_db - *out.target_snr_db;
  }
  out.target_slope = top_slope(target);
  out.reference_slope = top_slope(reference);
  return out;
}

}  // namespace pnc
