#pragma once

#include <cmath>
#include <numbers>
#include <random>
#include <utility>

#include "pnc/channel.hpp"

namespace pnc::detail {

/// Defensive-mixture proposal for (H_A, H_B) concentrated near the manifold
/// H_A da + H_B db = 0 at the given SNR. Each coefficient is drawn from the
/// true Rician law with probability kKeep and otherwise from a narrow complex
/// Gaussian, so likelihood ratios never exceed 1/kKeep^2.
class ManifoldProposal {
 public:
  static constexpr double kKeep = 0.5;

  ManifoldProposal(Complex da, Complex db, double k_factor, double snr)
      : params_{k_factor}, sampler_(params_) {
    const double nb = std::norm(db);
    if (nb > 0.0) {
      slope_ = -da / db;
      var_b_ = 8.0 / (snr * nb);
      var_a_ = 32.0 / (snr * nb);
    } else {
      conditional_b_ = false;
      var_a_ = 8.0 / (snr * std::max(std::norm(da), 1e-300));
    }
  }

  bool enabled() const { return enabled_; }
  void disable() { enabled_ = false; }

  /// Draws (H_A, H_B) and returns the likelihood ratio p/q.
  std::pair<Complex, Complex> draw(Engine& rng, double& weight) {
    if (!enabled_) {
      weight = 1.0;
      const Complex ha = sampler_(rng);
      return {ha, sampler_(rng)};
    }
    const Complex ha = coin_(rng) < kKeep ? sampler_(rng) : std::sqrt(var_a_) * unit_(rng);
    Complex hb;
    double ratio_b = 1.0;
    if (conditional_b_) {
      const Complex centre = slope_ * ha;
      hb = coin_(rng) < kKeep ? sampler_(rng) : centre + std::sqrt(var_b_) * unit_(rng);
      const double pb = rician_pdf(params_, hb);
      ratio_b = pb / (kKeep * pb + (1.0 - kKeep) * gaussian_pdf(hb - centre, var_b_));
    } else {
      hb = sampler_(rng);
    }
    const double pa = rician_pdf(params_, ha);
    const double ratio_a = pa / (kKeep * pa + (1.0 - kKeep) * gaussian_pdf(ha, var_a_));
    weight = ratio_a * ratio_b;
    return {ha, hb};
  }

 private:
  static double gaussian_pdf(Complex offset, double var) {
    return std::exp(-std::norm(offset) / var) / (std::numbers::pi * var);
  }

  RicianParams params_;
  RicianSampler sampler_;
  ComplexGaussian unit_;
  std::uniform_real_distribution<double> coin_{0.0, 1.0};
  Complex slope_{0.0, 0.0};
  double var_a_ = 1.0;
  double var_b_ = 1.0;
  bool conditional_b_ = true;
  bool enabled_ = true;
};

/// Streaming mean / standard error of weighted samples.
struct WeightedMoments {
  double sum = 0.0;
  double sum_sq = 0.0;
  std::uint64_t n = 0;
  std::uint64_t nonzero = 0;

  void add(double v) {
    sum += v;
    sum_sq += v * v;
    ++n;
    if (v != 0.0) ++nonzero;
  }
  void merge(const WeightedMoments& o) {
    sum += o.sum;
    sum_sq += o.sum_sq;
    n += o.n;
    nonzero += o.nonzero;
  }
  double mean() const { return n ? sum / static_cast<double>(n) : 0.0; }
  double std_error() const {
    if (n < 2) return 0.0;
    const double m = mean();
    const double var = std::max(0.0, sum_sq / static_cast<double>(n) - m * m);
    return std::sqrt(var / static_cast<double>(n - 1));
  }
};

}  // namespace pnc::detail
