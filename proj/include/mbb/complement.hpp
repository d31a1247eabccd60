#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "mbb/graph.hpp"

namespace mbb {

enum class ComponentKind { OddPath, EvenPath, Cycle };

const char* to_string(ComponentKind k);

/// A connected component of a bipartite complement in which every vertex
/// has complement degree <= 2: a path (vertices listed end to end) or an
/// even cycle (vertices listed around the cycle).
struct ComplementComponent {
  ComponentKind kind = ComponentKind::OddPath;
  std::vector<VertexRef> vertices;
  std::size_t edge_count = 0;

  std::size_t count(Side s) const;
};

/// One Pareto-maximal (a, b) pair: `a` left vertices and `b` right vertices
/// of the component with no complement edge between them. `witness` is one
/// such selection.
struct Instance {
  std::size_t a = 0;
  std::size_t b = 0;
  std::vector<VertexRef> witness;
};

/// Pareto-maximal instances sorted by ascending a (hence descending b).
struct InstanceTable {
  std::vector<Instance> pairs;

  std::vector<std::pair<std::size_t, std::size_t>> sizes() const;
};

/// Exact DP along the path or cycle; O(p^2).
InstanceTable component_maximal_instances(const ComplementComponent& c);

/// Canonical components with fresh vertex indices, used by tests and the
/// acceptance suite. A path with p edges alternates sides starting at
/// `first`; a cycle needs even p >= 4.
ComplementComponent make_path_component(std::size_t p, Side first);
ComplementComponent make_cycle_component(std::size_t p);

/// The closed-form instance lists as printed in the literature for odd
/// paths, even paths and cycles. Only the odd-path family and the 4-cycle
/// agree with exhaustive enumeration; the rest is kept for comparison.
std::vector<std::pair<std::size_t, std::size_t>> printed_instance_formula(const ComplementComponent& c);

}  // namespace mbb
