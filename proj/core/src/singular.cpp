#include "pnc/singular.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace pnc {
namespace {

// Snap components that are rounding noise around zero.
Complex snap(Complex z) {
  constexpr double eps = 1e-12;
  double re = std::abs(z.real()) < eps ? 0.0 : z.real();
  double im = std::abs(z.imag()) < eps ? 0.0 : z.imag();
  return {re, im};
}

}  // namespace

double dominance_factor(Complex s) {
  return std::norm(1.0 - s) / (1.0 + std::norm(s));
}

double wrapped_phase(Complex z) {
  double phase = std::arg(z);
  if (phase >= std::numbers::pi - 1e-12) phase = -std::numbers::pi;
  return phase;
}

double SingularState::magnitude() const { return std::abs(value); }

double SingularState::phase() const { return wrapped_phase(value); }

std::vector<SingularState> enumerate_singular_states(const Constellation& c) {
  const DifferenceSet diffs = difference_set(c);
  std::vector<SingularState> states;
  for (const Complex& da : diffs.values) {
    if (std::abs(da) < kDedupTolerance) continue;
    for (const Complex& db : diffs.values) {
      if (std::abs(db) < kDedupTolerance) continue;
      const Complex s = -da / db;
      auto it = std::find_if(states.begin(), states.end(), [&](const SingularState& st) {
        return std::abs(st.value - s) < kDedupTolerance;
      });
      if (it == states.end()) {
        SingularState st;
        st.value = snap(s);
        st.dominance = dominance_factor(st.value);
        st.generators.push_back({da, db});
        states.push_back(std::move(st));
      } else {
        it->generators.push_back({da, db});
      }
    }
  }
  std::sort(states.begin(), states.end(), [](const SingularState& x, const SingularState& y) {
    const double mx = x.magnitude();
    const double my = y.magnitude();
    if (std::abs(mx - my) > 1e-9) return mx < my;
    return x.phase() < y.phase();
  });
  return states;
}

std::vector<SingularState> select_dominant(std::span<const SingularState> states,
                                           double magnitude_tol) {
  std::vector<SingularState> out;
  std::vector<bool> taken(states.size(), false);
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (taken[i]) continue;
    std::vector<std::size_t> circle;
    for (std::size_t k = i; k < states.size(); ++k) {
      if (!taken[k] && std::abs(states[k].magnitude() - states[i].magnitude()) <= magnitude_tol) {
        circle.push_back(k);
        taken[k] = true;
      }
    }
    double least = std::numbers::pi;
    for (std::size_t k : circle) least = std::min(least, std::abs(states[k].phase()));
    for (std::size_t k : circle) {
      if (std::abs(states[k].phase()) <= least + 1e-9) out.push_back(states[k]);
    }
  }
  return out;
}

int find_state(std::span<const SingularState> states, Complex value) {
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (std::abs(states[i].value - value) < kDedupTolerance) return static_cast<int>(i);
  }
  return -1;
}

}  // namespace pnc
