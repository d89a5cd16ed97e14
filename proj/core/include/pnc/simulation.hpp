#pragma once

#include <cstdint>
#include <vector>

#include "pnc/channel.hpp"
#include "pnc/scheme.hpp"

namespace pnc {

struct SimulationConfig {
  Scheme scheme = Scheme::AdaptiveAll;
  int order = 4;
  double k_factor = 4.0;
  std::vector<double> snr_db;
  double symbol_energy = 1.0;
  /// Per-SNR trial cap.
  std::uint64_t max_trials = 100'000'000;
  /// Stop a point once this many union errors (E_A or E_B) are seen.
  std::uint64_t target_errors = 200;
  std::uint64_t seed = 1;
  int workers = 1;
  /// Trials per RNG substream. Early stopping happens on block boundaries.
  std::uint64_t block_size = 4096;
};

struct SerEstimate {
  double snr_db = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t errors_a = 0;
  std::uint64_t errors_b = 0;
  std::uint64_t errors_union = 0;
  std::uint64_t bit_errors = 0;
  double ser = 0.0;
  double std_error = 0.0;
  /// Gray-label bit error rate over both directions.
  double ber = 0.0;
};

/// End-to-end Monte Carlo SER of the two-phase exchange, one estimate per
/// SNR point. Each block of trials draws from its own substream keyed by
/// (seed, snr, block), so results do not depend on `workers`.
std::vector<SerEstimate> simulate_ser(const SimulationConfig& cfg, const RelayPolicy& policy);

struct PairwiseEstimate {
  double snr_db = 0.0;
  double probability = 0.0;
  double std_error = 0.0;
  std::uint64_t draws = 0;
  std::uint64_t hits = 0;
};

/// Monte Carlo estimate of P{relay ML-decodes `sent` exactly as `decoded` and
/// the two pairs fall in different clusters of the active map}. Fade
/// coefficients are importance-sampled towards the pair's error manifold
/// H_A da + H_B db = 0 (defensive mixture, weights bounded); noise is drawn
/// from its true law.
std::vector<PairwiseEstimate> estimate_pairwise(const SimulationConfig& cfg, SymbolPair sent,
                                                SymbolPair decoded, const RelayPolicy& policy,
                                                std::uint64_t draws = 1'000'000);

}  // namespace pnc
