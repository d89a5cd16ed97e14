#include "pnc/channel.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "pnc/errors.hpp"

namespace pnc {

RicianSampler::RicianSampler(RicianParams params)
    : los_(std::sqrt(params.k_factor / (params.k_factor + 1.0))),
      scatter_scale_(1.0 / std::sqrt(params.k_factor + 1.0)) {
  if (!(params.k_factor >= 0.0)) throw InvalidArgument("Rician factor must be non-negative");
}

Complex sample_rician(const RicianParams& params, Engine& rng) {
  RicianSampler sampler(params);
  return sampler(rng);
}

double rician_pdf(const RicianParams& params, Complex h) {
  const double k = params.k_factor;
  const double los = std::sqrt(k / (k + 1.0));
  return (k + 1.0) / std::numbers::pi * std::exp(-(k + 1.0) * std::norm(h - los));
}

SymbolPair relay_ml_decode(const Constellation& c, Complex ha, Complex hb, Complex y,
                           double symbol_energy) {
  const double amp = std::sqrt(symbol_energy);
  SymbolPair best;
  double best_d = std::numeric_limits<double>::infinity();
  for (int a = 0; a < c.size(); ++a) {
    const Complex residual = y - amp * ha * c.point(a);
    for (int b = 0; b < c.size(); ++b) {
      const double d = std::norm(residual - amp * hb * c.point(b));
      if (d < best_d) {
        best_d = d;
        best = {a, b};
      }
    }
  }
  return best;
}

int end_node_decode(const ClusterMap& m, std::span<const Complex> bc_points, EndNode node,
                    int own_symbol, Complex h, Complex y, double symbol_energy) {
  const Complex gain = std::sqrt(symbol_energy) * h;
  int best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  for (int partner = 0; partner < m.order(); ++partner) {
    const int label = node == EndNode::A ? m.label(own_symbol, partner) : m.label(partner, own_symbol);
    const double d = std::norm(y - gain * bc_points[static_cast<std::size_t>(label)]);
    if (d < best_d) {
      best_d = d;
      best = partner;
    }
  }
  return best;
}

}  // namespace pnc
