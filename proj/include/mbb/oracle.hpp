#pragma once

#include <cstddef>

#include "mbb/complement.hpp"
#include "mbb/graph.hpp"

namespace mbb {

struct OracleLimits {
  std::size_t max_vertices = 24;
  std::size_t max_side = 12;  // bound on the smaller side, which is enumerated
};

/// Exhaustive MBB: every subset of the smaller side, intersected with its
/// common neighbourhood. Throws TooLarge outside `limits`.
Biclique brute_force_mbb(const BipartiteGraph& g, const OracleLimits& limits = {});

/// Pareto-maximal (a, b) pairs of a path/cycle component by enumerating all
/// vertex subsets. Throws TooLarge when the component has more than 20 edges.
InstanceTable brute_force_component_instances(const ComplementComponent& c);

}  // namespace mbb
