#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mbb/errors.hpp"

namespace mbb {

enum class Side : std::uint8_t { Left = 0, Right = 1 };

constexpr Side opposite(Side s) { return s == Side::Left ? Side::Right : Side::Left; }
constexpr std::size_t side_index(Side s) { return static_cast<std::size_t>(s); }

/// A vertex is identified by its side and a 0-based index within that side.
/// Ordering is (side, index) with Left before Right.
struct VertexRef {
  Side side = Side::Left;
  std::uint32_t index = 0;

  auto operator<=>(const VertexRef&) const = default;
};

std::string to_string(VertexRef v);

struct Edge {
  std::uint32_t left = 0;
  std::uint32_t right = 0;

  auto operator<=>(const Edge&) const = default;
};

/// Sorted, duplicate-free index lists per side.
struct VertexSubset {
  std::vector<std::uint32_t> left;
  std::vector<std::uint32_t> right;

  std::vector<std::uint32_t>& of(Side s) { return s == Side::Left ? left : right; }
  const std::vector<std::uint32_t>& of(Side s) const { return s == Side::Left ? left : right; }
  std::size_t size() const { return left.size() + right.size(); }
  bool empty() const { return left.empty() && right.empty(); }
  bool contains(VertexRef v) const;

  bool operator==(const VertexSubset&) const = default;
};

/// A pair of vertex sets (A on the left, B on the right). A biclique when
/// every cross pair is an edge; see validate_biclique.
struct Biclique {
  std::vector<std::uint32_t> a_side;
  std::vector<std::uint32_t> b_side;

  std::size_t per_side() const { return std::min(a_side.size(), b_side.size()); }
  std::size_t total() const { return a_side.size() + b_side.size(); }
  bool empty() const { return a_side.empty() && b_side.empty(); }

  /// Sorts both sides and drops the highest indices of the larger side
  /// until |A| == |B|.
  void make_balanced();

  bool operator==(const Biclique&) const = default;
};

/// Immutable bipartite graph with sorted adjacency arrays (CSR per side).
class BipartiteGraph {
 public:
  BipartiteGraph() = default;

  /// Throws IndexOutOfBounds or DuplicateEdge.
  static BipartiteGraph from_edges(std::uint32_t left_count, std::uint32_t right_count,
                                   std::span<const Edge> edges);

  std::uint32_t left_count() const { return counts_[0]; }
  std::uint32_t right_count() const { return counts_[1]; }
  std::uint32_t side_count(Side s) const { return counts_[side_index(s)]; }
  std::size_t vertex_count() const { return std::size_t{counts_[0]} + counts_[1]; }
  std::size_t edge_count() const { return adj_[0].size(); }
  std::size_t max_degree() const { return max_degree_; }

  bool contains(VertexRef v) const { return v.index < side_count(v.side); }
  void check(VertexRef v) const;

  /// Opposite-side indices adjacent to v, ascending.
  std::span<const std::uint32_t> neighbors(VertexRef v) const;
  std::size_t degree(VertexRef v) const { return neighbors(v).size(); }
  bool has_edge(std::uint32_t left, std::uint32_t right) const;

  std::vector<Edge> edges() const;

  /// Dense id in [0, vertex_count): Left vertices first, then Right.
  std::size_t global_id(VertexRef v) const {
    return v.side == Side::Left ? v.index : std::size_t{counts_[0]} + v.index;
  }
  VertexRef from_global(std::size_t id) const {
    return id < counts_[0] ? VertexRef{Side::Left, static_cast<std::uint32_t>(id)}
                           : VertexRef{Side::Right, static_cast<std::uint32_t>(id - counts_[0])};
  }

  bool operator==(const BipartiteGraph& o) const {
    return counts_ == o.counts_ && offsets_ == o.offsets_ && adj_ == o.adj_;
  }

 private:
  std::array<std::uint32_t, 2> counts_{0, 0};
  std::array<std::vector<std::size_t>, 2> offsets_{std::vector<std::size_t>{0}, std::vector<std::size_t>{0}};
  std::array<std::vector<std::uint32_t>, 2> adj_;
  std::size_t max_degree_ = 0;
};

/// build_graph
inline BipartiteGraph build_graph(std::uint32_t left_count, std::uint32_t right_count,
                                  std::span<const Edge> edges) {
  return BipartiteGraph::from_edges(left_count, right_count, edges);
}

std::vector<VertexRef> neighbors(const BipartiteGraph& g, VertexRef u);

struct TwoHop {
  std::vector<VertexRef> n2;      // same side, distance exactly 2
  std::vector<VertexRef> n_le_2;  // N(u) ∪ n2, sorted by (side, index)
};

TwoHop two_hop(const BipartiteGraph& g, VertexRef u);

/// An induced subgraph together with the map back to parent indices.
struct InducedSubgraph {
  BipartiteGraph graph;
  std::vector<std::uint32_t> left_origin;
  std::vector<std::uint32_t> right_origin;

  const std::vector<std::uint32_t>& origin(Side s) const {
    return s == Side::Left ? left_origin : right_origin;
  }
  VertexRef to_parent(VertexRef v) const { return {v.side, origin(v.side).at(v.index)}; }
  Biclique to_parent(const Biclique& b) const;
};

/// Throws IndexOutOfBounds. Members may be given in any order; duplicates
/// are ignored.
InducedSubgraph induced_subgraph(const BipartiteGraph& g, const VertexSubset& s);

BipartiteGraph bipartite_complement(const BipartiteGraph& g);

struct BicliqueCheck {
  bool is_biclique = false;
  bool is_balanced = false;
};

BicliqueCheck validate_biclique(const BipartiteGraph& g, const Biclique& c);

VertexSubset full_subset(const BipartiteGraph& g);

}  // namespace mbb
