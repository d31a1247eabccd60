#pragma once

#include <cstdint>

#include "mbb/graph.hpp"

namespace mbb {

struct GenSpec {
  std::uint32_t left = 0;
  std::uint32_t right = 0;
  double density = 0.0;
  std::uint64_t seed = 0;
};

/// Independent edges with probability `density`.
///
/// Pairs are visited in row-major order (l, r); for each one a std::mt19937_64
/// seeded with `seed` emits a 64-bit word w, and the edge is kept iff
/// (w >> 11) * 2^-53 < density. Every pair consumes exactly one word, so the
/// same seed at a higher density yields a superset of edges.
BipartiteGraph generate_random(const GenSpec& spec);

}  // namespace mbb
