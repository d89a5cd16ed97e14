#pragma once

#include <cstdint>
#include <functional>

#include "pnc/constellation.hpp"

namespace pnc {

struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t draws = 0;
};

struct FadeIntegralOptions {
  std::uint64_t draws = 1'000'000;
  std::uint64_t seed = 1;
  /// Importance-sample (H_A, H_B) towards H_A da + H_B db = 0.
  bool importance = true;
};

/// Monte Carlo value of the averaged pairwise error integral
///   E[ Q(sqrt(snr/2) |H_A da + H_B db|) * 1{region(H_B/H_A)} ]
/// over i.i.d. Rician(K) coefficients. `region` may be empty (whole plane).
McEstimate pairwise_fade_integral(Complex da, Complex db, double k_factor, double snr,
                                  const std::function<bool(Complex)>& region,
                                  const FadeIntegralOptions& options = {});

}  // namespace pnc
