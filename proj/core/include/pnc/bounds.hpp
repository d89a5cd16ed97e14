#pragma once

#include <optional>
#include <span>
#include <vector>

#include "pnc/constellation.hpp"
#include "pnc/netmap.hpp"
#include "pnc/scheme.hpp"
#include "pnc/special_functions.hpp"

namespace pnc {

struct Lemma1Value {
  /// (1/pi) * integral over |h| >= c0 of exp(-r |h - h_c|^2) dh
  ///   = Q_1(sqrt(2r)|h_c|, sqrt(2r) c0) / r.
  double exact = 0.0;
  /// (1/r) c0/(c0 - |h_c|) exp(-r (c0 - |h_c|)^2); empty unless c0 > |h_c|.
  std::optional<double> upper;
};

/// Throws InvalidArgument unless r > 0 and c0 >= 0.
Lemma1Value lemma1_integral(double r, Complex h_c, double c0);

struct PairwiseBoundInput {
  Complex da;
  Complex db;
  double k_factor = 0.0;
  /// Linear SNR (E_s / sigma^2).
  double snr = 0.0;
  /// Radius of the removal circle; used by anc_cross_bound only.
  double delta = 0.0;
};

/// Fixed-map pairwise bound:
///   exp(-K |da+db|^2 / (|da|^2+|db|^2)) / (1 + snr (|da|^2+|db|^2) / 4).
double fnc_pairwise_bound(const PairwiseBoundInput& in);

/// Same-row / same-column pairs under adaptive coding: e^{-K} / (1 + snr|d|^2/4).
double anc_nonremovable_bound(Complex d, double k_factor, double snr);

inline constexpr double kHighSnrThreshold = 10.0;

enum class Validity { Enforce, Allow };

/// Adaptive-coding bound for pairs with da != 0 and db != 0 whose singular
/// state s = -da/db lies outside its removal circle of radius delta. Decays
/// as snr^-2. Valid only at high SNR: throws OutOfValidityRange for
/// snr < kHighSnrThreshold unless `validity` is Allow.
double anc_cross_bound(const PairwiseBoundInput& in, Validity validity = Validity::Enforce);

/// Broadcast-phase bound for one end node: e^{-K} / (1 + snr dmin^2 / 4).
double bc_phase_bound(double dmin, double k_factor, double snr);

struct RemovedState {
  Complex state;
  double delta = 0.0;
};

/// Everything the union bound needs about a relay strategy.
struct BoundScenario {
  /// Set for fixed schemes.
  std::optional<ClusterMap> fixed_map;
  /// Adaptive schemes: singular states with a removal region, and its radius.
  std::vector<RemovedState> removed;
  /// Minimum distance of the largest broadcast signal set.
  double bc_min_distance = 0.0;
};

enum class PairKind { IntraCluster, Nonremovable, Cross, Unremoved };

struct PairContribution {
  int sent = 0;     // row-major cell a * M + b
  int decoded = 0;
  PairKind kind = PairKind::IntraCluster;
  double value = 0.0;
};

struct StateContribution {
  Complex state;
  double value = 0.0;
};

struct BoundReport {
  double snr = 0.0;
  double k_factor = 0.0;
  /// Cross pairs whose state is removed (snr^-2 terms).
  double ma_cross = 0.0;
  /// Pairs with x_A = x'_A or x_B = x'_B.
  double ma_nonremovable = 0.0;
  /// Cross pairs handled by a fixed or non-removing map.
  double ma_unremoved = 0.0;
  /// Both broadcast terms.
  double bc = 0.0;
  double total = 0.0;
  /// False if some cross term was evaluated below kHighSnrThreshold.
  bool high_snr_valid = true;
  std::vector<PairContribution> pairs;
  /// Cross-pair contribution grouped by singular state, sorted descending.
  std::vector<StateContribution> by_state;
};

/// Union bound on the end-to-end SER averaged over a uniform sent pair.
/// Throws InvalidArgument if a cross pair's state is removed with delta <= 0.
BoundReport end_to_end_bound(const Constellation& c, const BoundScenario& scenario,
                             double k_factor, double snr);

/// Scenario for a policy: its fixed map, or its effectively removed states
/// with delta from estimate_delta.
BoundScenario make_bound_scenario(const RelayPolicy& policy, int angular_samples = 360,
                                  double radius_tol = 1e-3);

}  // namespace pnc
