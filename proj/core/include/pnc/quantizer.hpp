#pragma once

#include <optional>
#include <span>
#include <vector>

#include "pnc/netmap.hpp"

namespace pnc {

struct LibraryEntry {
  SingularState state;
  ClusterMap map;
};

struct LibraryOptions {
  /// Map used where no entry wins; defaults to xor_map(M).
  std::optional<ClusterMap> fallback;
  RemovalOptions removal;
};

/// Adaptive map catalogue: one removal map per singular state plus a fallback.
/// Map identifiers are entry indices; the fallback has id entries().size().
class MapLibrary {
 public:
  MapLibrary(const Constellation& c, std::vector<LibraryEntry> entries, ClusterMap fallback);

  const Constellation& constellation() const { return constellation_; }
  std::span<const LibraryEntry> entries() const { return entries_; }
  const ClusterMap& fallback() const { return fallback_; }
  int fallback_id() const { return static_cast<int>(entries_.size()); }
  int map_count() const { return fallback_id() + 1; }
  const ClusterMap& map(int id) const;
  const ClusterDistance& distance(int id) const {
    return evaluators_[static_cast<std::size_t>(id)];
  }

  /// Largest cluster count over all maps, and the minimum distance of
  /// the unit-energy PSK of that size.
  int max_clusters() const { return max_clusters_; }
  double s_prime_max_dmin() const { return psk_min_distance(max_clusters_); }

  /// Every removable singular state of the constellation.
  std::span<const SingularState> states() const { return states_; }
  /// Whether map `id` removes states()[state_index].
  bool map_removes(int id, int state_index) const;

 private:
  Constellation constellation_;
  std::vector<LibraryEntry> entries_;
  ClusterMap fallback_;
  std::vector<ClusterDistance> evaluators_;
  std::vector<SingularState> states_;
  std::vector<char> removal_table_;
  int max_clusters_ = 0;
};

/// One removal map per state; propagates ConstructionInfeasible.
/// Throws InvalidArgument for an empty state list.
MapLibrary build_library(const Constellation& c, std::span<const SingularState> states,
                         const LibraryOptions& options = {});

struct MapSelection {
  int id = 0;
  double distance = 0.0;
};

/// Map maximizing the minimum cluster distance at z. Ties (relative 1e-9)
/// go to the entry whose singular state is nearest z, then to the earlier
/// entry; the fallback never wins a tie.
MapSelection select_map(const MapLibrary& lib, Complex z);

struct DeltaEstimate {
  Complex state;
  double delta = 0.0;
  int angular_samples = 0;
  double radius_tol = 0.0;
  /// True when the whole probe circle at the search cap stays feasible.
  bool capped = false;
};

/// Largest radius r (relative precision radius_tol) such that every probe
/// s + r e^{j phi} selects a map removing s. Throws InconsistentLibrary if s
/// itself does not select such a map, InvalidArgument if s has no entry.
DeltaEstimate estimate_delta(const MapLibrary& lib, const SingularState& s,
                             int angular_samples = 360, double radius_tol = 1e-3);

/// Search cap: twice the largest distance between library states (or twice
/// the largest |s| when the library has a single state).
double delta_search_cap(const MapLibrary& lib);

struct Range {
  double lo = 0.0;
  double hi = 0.0;
};

/// Raster of selected map ids over `resolution` x `resolution` sample
/// points spanning both ranges inclusively (a single point at the centre
/// when resolution == 1). ids are row-major with the imaginary axis outer.
struct Raster {
  Range re;
  Range im;
  int resolution = 0;
  std::vector<int> ids;

  double re_at(int i) const;
  double im_at(int k) const;
  int id_at(int i, int k) const {
    return ids[static_cast<std::size_t>(k * resolution + i)];
  }
  /// Sample index closest to a coordinate along each axis.
  int nearest_re(double x) const;
  int nearest_im(double y) const;
};

Raster classify_grid(const MapLibrary& lib, Range re, Range im, int resolution,
                     int workers = 1);

}  // namespace pnc
