#pragma once

#include <cmath>
#include <random>
#include <span>

#include "pnc/constellation.hpp"
#include "pnc/netmap.hpp"
#include "pnc/rng.hpp"

namespace pnc {

/// Rician fading with factor K (LOS-to-scatter power ratio); LOS phase is 0.
struct RicianParams {
  double k_factor = 0.0;
};

/// Draws circularly-symmetric complex Gaussians CN(0, variance).
class ComplexGaussian {
 public:
  Complex operator()(Engine& rng, double variance = 1.0) {
    const double scale = std::sqrt(0.5 * variance);
    const double re = normal_(rng);
    const double im = normal_(rng);
    return {scale * re, scale * im};
  }

 private:
  std::normal_distribution<double> normal_{0.0, 1.0};
};

/// sqrt(K/(K+1)) + G / sqrt(K+1), G ~ CN(0, 1). Unit second moment.
class RicianSampler {
 public:
  explicit RicianSampler(RicianParams params);

  Complex operator()(Engine& rng) { return los_ + scatter_scale_ * gaussian_(rng); }
  double los() const { return los_; }
  double scatter_scale() const { return scatter_scale_; }

 private:
  double los_;
  double scatter_scale_;
  ComplexGaussian gaussian_;
};

Complex sample_rician(const RicianParams& params, Engine& rng);

/// Probability density of a Rician(K) coefficient at h.
double rician_pdf(const RicianParams& params, Complex h);

struct ChannelRealization {
  Complex ha;
  Complex hb;
  Complex ha_bc;
  Complex hb_bc;

  Complex fade_state() const { return hb / ha; }
};

struct SymbolPair {
  int a = 0;
  int b = 0;

  friend bool operator==(const SymbolPair&, const SymbolPair&) = default;
};

/// Joint ML estimate of (x_A, x_B) at the relay; ties go to the first
/// candidate in row-major order.
SymbolPair relay_ml_decode(const Constellation& c, Complex ha, Complex hb, Complex y,
                           double symbol_energy = 1.0);

enum class EndNode { A, B };

/// ML estimate of the partner's symbol at an end node that knows its own
/// symbol and the relay's map. Node A owns rows, node B owns columns.
int end_node_decode(const ClusterMap& m, std::span<const Complex> bc_points, EndNode node,
                    int own_symbol, Complex h, Complex y, double symbol_energy = 1.0);

}  // namespace pnc
