#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <random>

namespace pnc {

using Engine = std::mt19937_64;

/// SplitMix64 finalizer; a bijective 64-bit mix.
std::uint64_t mix64(std::uint64_t x);

/// Seed for the substream addressed by `keys` under `master`. Distinct key
/// tuples give statistically independent substreams.
std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::uint64_t> keys);

Engine make_engine(std::uint64_t master, std::initializer_list<std::uint64_t> keys);

/// Master seed from the PNC_SEED environment variable, if set and numeric.
std::optional<std::uint64_t> seed_from_env();

}  // namespace pnc
