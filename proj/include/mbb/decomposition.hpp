#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "mbb/graph.hpp"

namespace mbb {

enum class DecompositionKind { Core, Bicore };

/// Per-vertex core (or bicore) numbers plus the peel order that produced them.
struct DecompositionResult {
  DecompositionKind kind = DecompositionKind::Core;
  std::array<std::vector<std::uint32_t>, 2> numbers;
  std::uint32_t degeneracy = 0;
  std::vector<VertexRef> peel_order;

  std::uint32_t number_of(VertexRef v) const { return numbers[side_index(v.side)].at(v.index); }
};

/// Batagelj-Zaversnik bucket peeling, O(|V| + |E|).
DecompositionResult core_decompose(const BipartiteGraph& g);

/// Maximal subset of `mask` in which every vertex keeps at least k
/// neighbours inside the subset.
VertexSubset k_core_reduce(const BipartiteGraph& g, const VertexSubset& mask, std::uint32_t k);

enum class BicoreMode {
  /// 2-hop sets are maintained exactly: removing u also drops pairs whose
  /// only common neighbour was u.
  Exact,
  /// Only u is deleted from each stored N<=2 set. Cheaper, but can report
  /// stale |N<=2| values when a vertex was the sole connector of a 2-hop pair.
  Literal,
};

struct BicoreTrace {
  /// Number of (step, vertex) pairs whose |N<=2| dropped by more than one.
  std::uint64_t multi_drop_events = 0;
  std::uint32_t max_drop = 0;
};

/// Peels the vertex with minimum |N<=2|, then minimum |N|, then smallest
/// (side, index). The number of each vertex is the running maximum of the
/// |N<=2| values seen at removal time.
DecompositionResult bicore_decompose(const BipartiteGraph& g, BicoreMode mode = BicoreMode::Exact,
                                     BicoreTrace* trace = nullptr);

enum class CenterScope {
  /// N<=2 of the center measured inside the graph induced by the center and
  /// its order suffix. Keeps every member count within bidegeneracy + 1.
  Suffix,
  /// N<=2 measured in the whole graph, then intersected with the suffix.
  Global,
};

struct CenteredSubgraph {
  VertexRef center;
  VertexSubset members;
  InducedSubgraph sub;

  /// The center's index inside `sub.graph`.
  VertexRef local_center() const;
};

/// Throws InvalidOrder when `order` is not a permutation of V(g).
std::vector<std::size_t> order_positions(const BipartiteGraph& g, const std::vector<VertexRef>& order);

/// Centered subgraph for order[i]; `pos` from order_positions.
CenteredSubgraph centered_subgraph(const BipartiteGraph& g, const std::vector<VertexRef>& order,
                                   const std::vector<std::size_t>& pos, std::size_t i,
                                   CenterScope scope = CenterScope::Suffix);

std::vector<CenteredSubgraph> vertex_centered_subgraphs(const BipartiteGraph& g,
                                                        const std::vector<VertexRef>& order,
                                                        CenterScope scope = CenterScope::Suffix);

}  // namespace mbb
