#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pnc/quantizer.hpp"

namespace pnc {

enum class Scheme {
  FixedModulo,
  FixedXor,
  AdaptiveAll,
  AdaptiveDominant,
  AdaptiveOnlyS1,
  AdaptiveAllButS1,
};

std::string_view to_string(Scheme scheme);
/// Accepts the canonical names: fixed-modulo, fixed-xor, adaptive-all,
/// adaptive-dominant, adaptive-only-s1, adaptive-all-but-s1.
Scheme parse_scheme(std::string_view name);
std::span<const Scheme> all_schemes();
bool is_adaptive(Scheme scheme);

/// What the relay does with a fade state: a fixed map, or adaptive selection
/// from a library. Also carries the broadcast PSK for each map.
class RelayPolicy {
 public:
  static RelayPolicy fixed(const Constellation& c, ClusterMap map);
  static RelayPolicy adaptive(MapLibrary library);

  bool adaptive() const { return library_.has_value(); }
  const Constellation& constellation() const { return constellation_; }
  const MapLibrary* library() const { return library_ ? &*library_ : nullptr; }

  int map_count() const { return static_cast<int>(maps_.size()); }
  const ClusterMap& map(int id) const { return maps_[static_cast<std::size_t>(id)]; }
  std::span<const Complex> bc_points(int id) const {
    return bc_points_[static_cast<std::size_t>(id)];
  }
  int max_clusters() const;

  int select(Complex z) const { return library_ ? select_map(*library_, z).id : 0; }

 private:
  RelayPolicy(Constellation c, std::vector<ClusterMap> maps, std::optional<MapLibrary> lib);

  Constellation constellation_;
  std::vector<ClusterMap> maps_;
  std::vector<std::vector<Complex>> bc_points_;
  std::optional<MapLibrary> library_;
};

/// States a scheme builds removal maps for.
std::vector<SingularState> scheme_states(Scheme scheme, const Constellation& c);

/// Fixed map for fixed schemes; library for adaptive ones. The all-but-s1
/// scheme uses modulo_map as fallback and forbids maps that remove s = 1.
RelayPolicy make_policy(Scheme scheme, const Constellation& c);

/// States s of the constellation for which the policy's selection at z = s
/// is a map that removes s (a removal region exists around s).
std::vector<SingularState> effective_removed_states(const RelayPolicy& policy);

}  // namespace pnc
