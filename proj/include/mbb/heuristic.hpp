#pragma once

#include "mbb/graph.hpp"

namespace mbb {

enum class HeuristicStrategy {
  MaxDegree,     // score = degree inside the mask
  MaxCore,       // score = core number of the mask-induced subgraph
  MaxLocalCore,  // same score, applied to a vertex-centred subgraph
};

const char* to_string(HeuristicStrategy s);

/// Greedy balanced biclique restricted to `mask`.
///
/// Seeds with the highest-scoring vertex (ties: smallest (side, index)), then
/// alternately adds to the opposite side and back the highest-scoring vertex
/// adjacent to everything chosen on the other side, until the side whose turn
/// it is has no candidate left. The larger side is trimmed to balance.
/// With top_r > 1 the top r seeds are tried and the largest result kept.
Biclique greedy_balanced_biclique(const BipartiteGraph& g, const VertexSubset& mask, HeuristicStrategy strategy,
                                  unsigned top_r = 1);

}  // namespace mbb
