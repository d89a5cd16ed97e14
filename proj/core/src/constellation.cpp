#include "pnc/constellation.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "pnc/errors.hpp"

namespace pnc {

Constellation::Constellation(std::vector<Complex> points, std::vector<int> labels, int bits)
    : points_(std::move(points)), labels_(std::move(labels)), bits_(bits) {}

Constellation Constellation::psk(int order) {
  if (order != 2 && order != 4 && order != 8 && order != 16) {
    throw InvalidArgument("PSK order must be 2, 4, 8 or 16, got " + std::to_string(order));
  }
  std::vector<int> labels(static_cast<std::size_t>(order));
  for (int k = 0; k < order; ++k) labels[static_cast<std::size_t>(k)] = k ^ (k >> 1);
  return Constellation(psk_points(order), std::move(labels), std::countr_zero(unsigned(order)));
}

std::vector<Complex> psk_points(int order) {
  if (order < 1) throw InvalidArgument("PSK order must be positive");
  std::vector<Complex> points;
  points.reserve(static_cast<std::size_t>(order));
  const double step = 2.0 * std::numbers::pi / order;
  for (int k = 0; k < order; ++k) points.push_back(std::polar(1.0, 0.5 * step + step * k));
  return points;
}

double psk_min_distance(int order) {
  if (order < 1) throw InvalidArgument("PSK order must be positive");
  if (order == 1) return std::numeric_limits<double>::infinity();
  return 2.0 * std::sin(std::numbers::pi / order);
}

bool DifferenceSet::contains(Complex value, double tol) const {
  return std::any_of(values.begin(), values.end(),
                     [&](Complex v) { return std::abs(v - value) < tol; });
}

DifferenceSet difference_set(const Constellation& c) {
  DifferenceSet set;
  for (const Complex& x : c.points()) {
    for (const Complex& xp : c.points()) {
      const Complex d = x - xp;
      if (!set.contains(d)) set.values.push_back(d);
    }
  }
  return set;
}

std::vector<EffectivePoint> effective_constellation(const Constellation& c, Complex ha,
                                                    Complex hb) {
  std::vector<EffectivePoint> out;
  out.reserve(static_cast<std::size_t>(c.size() * c.size()));
  for (int a = 0; a < c.size(); ++a) {
    for (int b = 0; b < c.size(); ++b) out.push_back({a, b, ha * c.point(a) + hb * c.point(b)});
  }
  return out;
}

double min_distance(const Constellation& c, Complex ha, Complex hb) {
  const auto pts = effective_constellation(c, ha, hb);
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t k = i + 1; k < pts.size(); ++k) {
      best = std::min(best, std::abs(pts[i].value - pts[k].value));
    }
  }
  return best;
}

}  // namespace pnc
