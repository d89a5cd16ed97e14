#include "pnc/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "pnc/errors.hpp"
#include "pnc/quantizer.hpp"

namespace pnc {
namespace {

void check_snr_k(double snr, double k_factor) {
  if (!(snr >= 0.0)) throw InvalidArgument("snr must be non-negative");
  if (!(k_factor >= 0.0)) throw InvalidArgument("Rician factor must be non-negative");
}

bool is_zero(Complex d) { return std::abs(d) < kDedupTolerance; }

}  // namespace

Lemma1Value lemma1_integral(double r, Complex h_c, double c0) {
  if (!(r > 0.0)) throw InvalidArgument("r must be positive");
  if (!(c0 >= 0.0)) throw InvalidArgument("c0 must be non-negative");
  const double scale = std::sqrt(2.0 * r);
  const double hc = std::abs(h_c);
  Lemma1Value out;
  out.exact = marcum_q1(scale * hc, scale * c0) / r;
  if (c0 > hc) {
    const double gap = c0 - hc;
    out.upper = c0 / gap * std::exp(-r * gap * gap) / r;
  }
  return out;
}

double fnc_pairwise_bound(const PairwiseBoundInput& in) {
  check_snr_k(in.snr, in.k_factor);
  const double energy = std::norm(in.da) + std::norm(in.db);
  if (!(energy > 0.0)) throw InvalidArgument("difference pair must be nonzero");
  return std::exp(-in.k_factor * std::norm(in.da + in.db) / energy) /
         (1.0 + in.snr * energy / 4.0);
}

double anc_nonremovable_bound(Complex d, double k_factor, double snr) {
  check_snr_k(snr, k_factor);
  if (is_zero(d)) throw InvalidArgument("difference must be nonzero");
  return std::exp(-k_factor) / (1.0 + snr * std::norm(d) / 4.0);
}

double anc_cross_bound(const PairwiseBoundInput& in, Validity validity) {
  check_snr_k(in.snr, in.k_factor);
  if (is_zero(in.da) || is_zero(in.db)) throw InvalidArgument("both differences must be nonzero");
  if (!(in.delta > 0.0)) throw InvalidArgument("delta must be positive");
  if (validity == Validity::Enforce && in.snr < kHighSnrThreshold) {
    throw OutOfValidityRange("cross-pair bound is only valid for snr >= 10");
  }
  const double k = in.k_factor;
  const Complex s = -in.da / in.db;
  const double d1 = k + 1.0 + in.snr * std::norm(in.db) / 4.0;
  const double d2 = d1 * in.delta * in.delta + (k + 1.0) * (1.0 + std::norm(in.da) / std::norm(in.db));
  return std::exp(-2.0 * k + k * (k + 1.0) * std::norm(1.0 + s) / d2) / (d1 * d2);
}

double bc_phase_bound(double dmin, double k_factor, double snr) {
  check_snr_k(snr, k_factor);
  if (!(dmin > 0.0)) throw InvalidArgument("broadcast minimum distance must be positive");
  return std::exp(-k_factor) / (1.0 + snr * dmin * dmin / 4.0);
}

BoundReport end_to_end_bound(const Constellation& c, const BoundScenario& scenario,
                             double k_factor, double snr) {
  check_snr_k(snr, k_factor);
  const int m = c.size();
  if (scenario.fixed_map && scenario.fixed_map->order() != m) {
    throw InvalidArgument("map order does not match constellation");
  }
  for (const auto& r : scenario.removed) {
    if (!(r.delta > 0.0)) throw InvalidArgument("removed state has no positive delta");
  }

  BoundReport out;
  out.snr = snr;
  out.k_factor = k_factor;
  const double weight = 1.0 / (static_cast<double>(m) * m);
  std::vector<StateContribution> states;

  auto add_state = [&](Complex s, double v) {
    for (auto& e : states) {
      if (std::abs(e.state - s) < kDedupTolerance) {
        e.value += v;
        return;
      }
    }
    states.push_back({s, v});
  };

  for (int sent = 0; sent < m * m; ++sent) {
    const int a = sent / m, b = sent % m;
    for (int dec = 0; dec < m * m; ++dec) {
      if (dec == sent) continue;
      const int a2 = dec / m, b2 = dec % m;
      const Complex da = c.point(a) - c.point(a2);
      const Complex db = c.point(b) - c.point(b2);
      PairContribution pc{sent, dec, PairKind::IntraCluster, 0.0};
      const bool nonremovable = a == a2 || b == b2;

      if (scenario.fixed_map) {
        if (scenario.fixed_map->label(a, b) != scenario.fixed_map->label(a2, b2)) {
          pc.kind = nonremovable ? PairKind::Nonremovable : PairKind::Unremoved;
          pc.value = fnc_pairwise_bound({da, db, k_factor, snr, 0.0});
        }
      } else if (nonremovable) {
        pc.kind = PairKind::Nonremovable;
        pc.value = anc_nonremovable_bound(a == a2 ? db : da, k_factor, snr);
      } else {
        const Complex s = -da / db;
        const auto it = std::find_if(scenario.removed.begin(), scenario.removed.end(),
                                     [&](const RemovedState& r) {
                                       return std::abs(r.state - s) < kDedupTolerance;
                                     });
        if (it != scenario.removed.end()) {
          pc.kind = PairKind::Cross;
          pc.value = anc_cross_bound({da, db, k_factor, snr, it->delta}, Validity::Allow);
          if (snr < kHighSnrThreshold) out.high_snr_valid = false;
        } else {
          pc.kind = PairKind::Unremoved;
          pc.value = fnc_pairwise_bound({da, db, k_factor, snr, 0.0});
        }
      }

      const double v = weight * pc.value;
      switch (pc.kind) {
        case PairKind::IntraCluster: break;
        case PairKind::Nonremovable: out.ma_nonremovable += v; break;
        case PairKind::Cross: out.ma_cross += v; break;
        case PairKind::Unremoved: out.ma_unremoved += v; break;
      }
      if (pc.kind == PairKind::Cross || pc.kind == PairKind::Unremoved) add_state(-da / db, v);
      out.pairs.push_back(pc);
    }
  }
  out.bc = 2.0 * bc_phase_bound(scenario.bc_min_distance, k_factor, snr);
  out.total = out.ma_cross + out.ma_nonremovable + out.ma_unremoved + out.bc;
  std::stable_sort(states.begin(), states.end(),
                   [](const auto& x, const auto& y) { return x.value > y.value; });
  out.by_state = std::move(states);
  return out;
}

BoundScenario make_bound_scenario(const RelayPolicy& policy, int angular_samples,
                                  double radius_tol) {
  BoundScenario out;
  out.bc_min_distance = psk_min_distance(policy.max_clusters());
  const MapLibrary* lib = policy.library();
  if (lib == nullptr) {
    out.fixed_map = policy.map(0);
    return out;
  }
  for (const auto& s : effective_removed_states(policy)) {
    out.removed.push_back({s.value, estimate_delta(*lib, s, angular_samples, radius_tol).delta});
  }
  return out;
}

}  // namespace pnc
