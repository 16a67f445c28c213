#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "slicekit/sphere.hpp"

namespace slicekit {

// On-disk grid cache, enabled by the SLICEKIT_CACHE_DIR environment variable.
// One file per (n, level, scheme, seed); one record per node, little-endian
// 64-bit floats (coords then weight). Loads are bit-exact.

std::string grid_cache_dir(); // empty when disabled

std::string grid_cache_filename(int n, int level, Scheme scheme, std::uint64_t seed);

std::optional<SphereGrid> load_cached_grid(int n, int level, Scheme scheme, std::uint64_t seed);

// Best effort; silently skips when the cache is disabled or unwritable.
void store_cached_grid(const SphereGrid& grid);

} // namespace slicekit
