#include "pnc/scheme.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "pnc/errors.hpp"

namespace pnc {
namespace {

constexpr std::array kSchemes{Scheme::FixedModulo,      Scheme::FixedXor,
                              Scheme::AdaptiveAll,      Scheme::AdaptiveDominant,
                              Scheme::AdaptiveOnlyS1,   Scheme::AdaptiveAllButS1};

}  // namespace

std::string_view to_string(Scheme scheme) {
  switch (scheme) {
    case Scheme::FixedModulo: return "fixed-modulo";
    case Scheme::FixedXor: return "fixed-xor";
    case Scheme::AdaptiveAll: return "adaptive-all";
    case Scheme::AdaptiveDominant: return "adaptive-dominant";
    case Scheme::AdaptiveOnlyS1: return "adaptive-only-s1";
    case Scheme::AdaptiveAllButS1: return "adaptive-all-but-s1";
  }
  return "unknown";
}

Scheme parse_scheme(std::string_view name) {
  for (Scheme s : kSchemes)
    if (to_string(s) == name) return s;
  throw InvalidArgument("unknown scheme '" + std::string(name) + "'");
}

std::span<const Scheme> all_schemes() { return kSchemes; }

bool is_adaptive(Scheme scheme) {
  return scheme != Scheme::FixedModulo && scheme != Scheme::FixedXor;
}

RelayPolicy::RelayPolicy(Constellation c, std::vector<ClusterMap> maps,
                         std::optional<MapLibrary> lib)
    : constellation_(std::move(c)), maps_(std::move(maps)), library_(std::move(lib)) {
  for (const auto& m : maps_) {
    if (!check_exclusive_law(m)) throw InvalidArgument("relay maps must satisfy the exclusive law");
    bc_points_.push_back(psk_points(m.clusters()));
  }
}

RelayPolicy RelayPolicy::fixed(const Constellation& c, ClusterMap map) {
  if (map.order() != c.size()) throw InvalidArgument("map order does not match constellation");
  std::vector<ClusterMap> maps{std::move(map)};
  return RelayPolicy(c, std::move(maps), std::nullopt);
}

RelayPolicy RelayPolicy::adaptive(MapLibrary library) {
  std::vector<ClusterMap> maps;
  for (int id = 0; id < library.map_count(); ++id) maps.push_back(library.map(id));
  Constellation c = library.constellation();
  return RelayPolicy(std::move(c), std::move(maps), std::move(library));
}

int RelayPolicy::max_clusters() const {
  int out = 0;
  for (const auto& m : maps_) out = std::max(out, m.clusters());
  return out;
}

std::vector<SingularState> scheme_states(Scheme scheme, const Constellation& c) {
  auto states = enumerate_singular_states(c);
  switch (scheme) {
    case Scheme::FixedModulo:
    case Scheme::FixedXor:
      return {};
    case Scheme::AdaptiveAll:
      return states;
    case Scheme::AdaptiveDominant:
      return select_dominant(states);
    case Scheme::AdaptiveOnlyS1: {
      const int one = find_state(states, 1.0);
      return {states.at(static_cast<std::size_t>(one))};
    }
    case Scheme::AdaptiveAllButS1: {
      std::erase_if(states, [](const SingularState& s) { return std::abs(s.value - 1.0) < kDedupTolerance; });
      return states;
    }
  }
  return {};
}

RelayPolicy make_policy(Scheme scheme, const Constellation& c) {
  switch (scheme) {
    case Scheme::FixedModulo: return RelayPolicy::fixed(c, modulo_map(c.size()));
    case Scheme::FixedXor: return RelayPolicy::fixed(c, xor_map(c.size()));
    default: break;
  }
  LibraryOptions options;
  if (scheme == Scheme::AdaptiveAllButS1) {
    options.fallback = modulo_map(c.size());
    options.removal.keep_singular.push_back(1.0);
  }
  const auto states = scheme_states(scheme, c);
  return RelayPolicy::adaptive(build_library(c, states, options));
}

std::vector<SingularState> effective_removed_states(const RelayPolicy& policy) {
  const MapLibrary* lib = policy.library();
  if (lib == nullptr) return {};
  std::vector<SingularState> out;
  const auto states = lib->states();
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (lib->map_removes(select_map(*lib, states[i].value).id, static_cast<int>(i))) {
      out.push_back(states[i]);
    }
  }
  return out;
}

}  // namespace pnc
