#pragma once

#include <span>
#include <vector>

#include "pnc/constellation.hpp"

namespace pnc {

/// A pair of symbol differences (x_A - x'_A, x_B - x'_B).
struct DifferencePair {
  Complex da;
  Complex db;
};

/// A removable singular fade state s = -da/db.
struct SingularState {
  Complex value;
  std::vector<DifferencePair> generators;
  double dominance = 0.0;

  double magnitude() const;
  /// Phase angle in [-pi, pi).
  double phase() const;
};

/// |1 - s|^2 / (1 + |s|^2). Zero only at s = 1.
double dominance_factor(Complex s);

/// Phase of z mapped into [-pi, pi).
double wrapped_phase(Complex z);

/// All removable singular fade states of c, sorted by (|s|, phase).
/// 0 and infinity are excluded.
std::vector<SingularState> enumerate_singular_states(const Constellation& c);

/// On each circle |s| = const, keeps the states with the least |phase|.
/// Ties (conjugate pairs) are both kept.
std::vector<SingularState> select_dominant(std::span<const SingularState> states,
                                           double magnitude_tol = 1e-6);

/// Index of the state equal to `value` within kDedupTolerance, or -1.
int find_state(std::span<const SingularState> states, Complex value);

}  // namespace pnc
