#include "pnc/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace pnc {
namespace {

constexpr double kSeriesLimit = 20.0;

double log_add(double x, double y) {
  if (x == -std::numeric_limits<double>::infinity()) return y;
  if (y == -std::numeric_limits<double>::infinity()) return x;
  const double hi = std::max(x, y);
  return hi + std::log1p(std::exp(std::min(x, y) - hi));
}

// e^{-x} I_0(x) for x >= kSeriesLimit.
double i0_scaled_asymptotic(double x) {
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 30; ++k) {
    const double next = term * (2.0 * k - 1.0) * (2.0 * k - 1.0) / (k * 8.0 * x);
    if (next > term) break;
    term = next;
    sum += term;
    if (term < 1e-17 * sum) break;
  }
  return sum / std::sqrt(2.0 * std::numbers::pi * x);
}

double i0_series(double x) {
  const double q = 0.25 * x * x;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 500; ++k) {
    term *= q / (static_cast<double>(k) * k);
    sum += term;
    if (term < 1e-17 * sum) break;
  }
  return sum;
}

}  // namespace

double gaussian_q(double x) { return 0.5 * std::erfc(x / std::numbers::sqrt2); }

double bessel_i0(double x) {
  x = std::abs(x);
  if (x < kSeriesLimit) return i0_series(x);
  return std::exp(x) * i0_scaled_asymptotic(x);
}

double bessel_i0_scaled(double x) {
  x = std::abs(x);
  if (x < kSeriesLimit) return std::exp(-x) * i0_series(x);
  return i0_scaled_asymptotic(x);
}

double marcum_q1(double a, double b) {
  if (a < 0.0 || b < 0.0 || !std::isfinite(a) || !std::isfinite(b)) {
    return std::numeric_limits<double>::quiet_NaN();
  }
  if (b == 0.0) return 1.0;
  const double x = 0.5 * a * a;
  const double y = 0.5 * b * b;
  if (x == 0.0) return std::exp(-y);
  if (b < a) {
    // Near 1 the direct series loses digits; use
    // Q1(a, b) + Q1(b, a) = 1 + exp(-(a^2 + b^2) / 2) I0(ab).
    const double q = 1.0 + bessel_i0_scaled(a * b) * std::exp(-0.5 * (a - b) * (a - b)) - marcum_q1(b, a);
    return std::clamp(q, 0.0, 1.0);
  }

  const double log_x = std::log(x);
  const double log_y = std::log(y);
  // Terms peak near max(x, ab/2); sum well past it, then until negligible.
  const double centre = std::max(x, 0.5 * a * b);
  const double past = centre + 12.0 * std::sqrt(centre + 1.0) + 20.0;

  double log_px = -x;  // log Pois(n; x)
  double log_py = -y;  // log Pois(n; y)
  double log_cdf = -y;  // log P[Pois(y) <= n]
  double sum = 0.0;
  for (long n = 0; n < 10'000'000; ++n) {
    if (n > 0) {
      const double ln = std::log(static_cast<double>(n));
      log_px += log_x - ln;
      log_py += log_y - ln;
      log_cdf = log_add(log_cdf, log_py);
    }
    const double term = std::exp(log_px + log_cdf);
    sum += term;
    if (n > past && (term <= 1e-18 * sum || (sum == 0.0 && log_px < -800.0))) break;
  }
  return std::min(1.0, sum);
}

}  // namespace pnc
