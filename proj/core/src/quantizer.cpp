#include "pnc/quantizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <thread>

#include "pnc/errors.hpp"

namespace pnc {

MapLibrary::MapLibrary(const Constellation& c, std::vector<LibraryEntry> entries,
                       ClusterMap fallback)
    : constellation_(c),
      entries_(std::move(entries)),
      fallback_(std::move(fallback)),
      states_(enumerate_singular_states(c)) {
  evaluators_.reserve(entries_.size() + 1);
  for (const auto& e : entries_) {
    evaluators_.emplace_back(e.map, c);
    max_clusters_ = std::max(max_clusters_, e.map.clusters());
  }
  evaluators_.emplace_back(fallback_, c);
  max_clusters_ = std::max(max_clusters_, fallback_.clusters());

  const double tol2 = kRemovalTolerance * kRemovalTolerance;
  removal_table_.reserve(evaluators_.size() * states_.size());
  for (const auto& eval : evaluators_) {
    for (const auto& s : states_) removal_table_.push_back(eval.squared(s.value) > tol2);
  }
}

const ClusterMap& MapLibrary::map(int id) const {
  if (id == fallback_id()) return fallback_;
  return entries_.at(static_cast<std::size_t>(id)).map;
}

bool MapLibrary::map_removes(int id, int state_index) const {
  return removal_table_[static_cast<std::size_t>(id) * states_.size() +
                        static_cast<std::size_t>(state_index)] != 0;
}

MapLibrary build_library(const Constellation& c, std::span<const SingularState> states,
                         const LibraryOptions& options) {
  if (states.empty()) throw InvalidArgument("a map library needs at least one singular state");
  std::vector<LibraryEntry> entries;
  entries.reserve(states.size());
  for (const auto& s : states) entries.push_back({s, build_removal_map(c, s, options.removal)});
  ClusterMap fallback = options.fallback ? *options.fallback : xor_map(c.size());
  return MapLibrary(c, std::move(entries), std::move(fallback));
}

MapSelection select_map(const MapLibrary& lib, Complex z) {
  constexpr double kTie = 1e-9;
  const auto entries = lib.entries();
  // Distance from z to a map's own singular state; the fallback has none.
  auto state_gap = [&](int id) {
    return id < static_cast<int>(entries.size()) ? std::abs(z - entries[static_cast<std::size_t>(id)].state.value)
                                                  : std::numeric_limits<double>::infinity();
  };
  MapSelection best{0, 0.0};
  double best_sq = -1.0;
  for (int id = 0; id < lib.map_count(); ++id) {
    const double floor = best_sq * (1.0 - kTie);
    const double sq = lib.distance(id).squared_below(z, floor);
    if (sq <= floor) continue;
    if (best_sq < 0.0 || sq > best_sq * (1.0 + kTie) || state_gap(id) < state_gap(best.id)) {
      best_sq = sq;
      best.id = id;
    }
  }
  best.distance = std::sqrt(best_sq);
  return best;
}

double delta_search_cap(const MapLibrary& lib) {
  const auto entries = lib.entries();
  double widest = 0.0;
  for (std::size_t i = 0; i < entries.size(); ++i)
    for (std::size_t k = i + 1; k < entries.size(); ++k)
      widest = std::max(widest, std::abs(entries[i].state.value - entries[k].state.value));
  if (entries.size() < 2) {
    for (const auto& e : entries) widest = std::max({widest, std::abs(e.state.value), 1.0});
  }
  return 2.0 * widest;
}

DeltaEstimate estimate_delta(const MapLibrary& lib, const SingularState& s, int angular_samples,
                             double radius_tol) {
  if (angular_samples < 1) throw InvalidArgument("angular_samples must be positive");
  if (!(radius_tol > 0.0)) throw InvalidArgument("radius_tol must be positive");
  const int idx = find_state(lib.states(), s.value);
  if (idx < 0) throw InvalidArgument("state is not a singular fade state of the library");
  if (!lib.map_removes(select_map(lib, s.value).id, idx)) {
    throw InconsistentLibrary("the map selected at the singular state does not remove it");
  }

  auto feasible = [&](double r) {
    for (int k = 0; k < angular_samples; ++k) {
      const Complex z = s.value + std::polar(r, 2.0 * std::numbers::pi * k / angular_samples);
      if (!lib.map_removes(select_map(lib, z).id, idx)) return false;
    }
    return true;
  };

  DeltaEstimate out;
  out.state = s.value;
  out.angular_samples = angular_samples;
  out.radius_tol = radius_tol;
  const double cap = delta_search_cap(lib);
  if (feasible(cap)) {
    out.delta = cap;
    out.capped = true;
    return out;
  }
  double lo = 0.0, hi = cap;
  for (int iter = 0; iter < 200 && hi - lo > radius_tol * hi; ++iter) {
    const double mid = 0.5 * (lo + hi);
    (feasible(mid) ? lo : hi) = mid;
  }
  out.delta = lo;
  return out;
}

double Raster::re_at(int i) const {
  if (resolution == 1) return 0.5 * (re.lo + re.hi);
  return re.lo + (re.hi - re.lo) * i / (resolution - 1);
}

double Raster::im_at(int k) const {
  if (resolution == 1) return 0.5 * (im.lo + im.hi);
  return im.lo + (im.hi - im.lo) * k / (resolution - 1);
}

namespace {

int nearest_index(Range r, int resolution, double x) {
  if (resolution == 1) return 0;
  const double t = (x - r.lo) / (r.hi - r.lo) * (resolution - 1);
  return std::clamp(static_cast<int>(std::lround(t)), 0, resolution - 1);
}

}  // namespace

int Raster::nearest_re(double x) const { return nearest_index(re, resolution, x); }
int Raster::nearest_im(double y) const { return nearest_index(im, resolution, y); }

Raster classify_grid(const MapLibrary& lib, Range re, Range im, int resolution, int workers) {
  if (resolution < 1) throw InvalidArgument("raster resolution must be positive");
  Raster raster{re, im, resolution, {}};
  raster.ids.resize(static_cast<std::size_t>(resolution) * static_cast<std::size_t>(resolution));
  auto fill_rows = [&](int first, int stride) {
    for (int k = first; k < resolution; k += stride) {
      for (int i = 0; i < resolution; ++i) {
        raster.ids[static_cast<std::size_t>(k * resolution + i)] =
            select_map(lib, {raster.re_at(i), raster.im_at(k)}).id;
      }
    }
  };
  workers = std::max(1, workers);
  if (workers == 1) {
    fill_rows(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(fill_rows, w, workers);
  }
  return raster;
}

}  // namespace pnc
