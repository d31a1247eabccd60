#include "mbb/graph.hpp"

#include <algorithm>

namespace mbb {

std::string to_string(VertexRef v) {
  return (v.side == Side::Left ? "l" : "r") + std::to_string(v.index);
}

bool VertexSubset::contains(VertexRef v) const {
  const auto& s = of(v.side);
  return std::binary_search(s.begin(), s.end(), v.index);
}

void Biclique::make_balanced() {
  std::sort(a_side.begin(), a_side.end());
  std::sort(b_side.begin(), b_side.end());
  const auto k = per_side();
  a_side.resize(k);
  b_side.resize(k);
}

BipartiteGraph BipartiteGraph::from_edges(std::uint32_t left_count, std::uint32_t right_count,
                                          std::span<const Edge> edges) {
  BipartiteGraph g;
  g.counts_ = {left_count, right_count};
  std::array<std::vector<std::size_t>, 2> deg{std::vector<std::size_t>(left_count, 0),
                                              std::vector<std::size_t>(right_count, 0)};
  for (const auto& e : edges) {
    if (e.left >= left_count || e.right >= right_count) {
      throw IndexOutOfBounds("edge (" + std::to_string(e.left) + "," + std::to_string(e.right) +
                             ") outside " + std::to_string(left_count) + "x" +
                             std::to_string(right_count));
    }
    ++deg[0][e.left];
    ++deg[1][e.right];
  }
  for (std::size_t s = 0; s < 2; ++s) {
    auto& off = g.offsets_[s];
    off.assign(deg[s].size() + 1, 0);
    for (std::size_t i = 0; i < deg[s].size(); ++i) off[i + 1] = off[i] + deg[s][i];
    g.adj_[s].assign(edges.size(), 0);
  }
  std::array<std::vector<std::size_t>, 2> fill{
      std::vector<std::size_t>(g.offsets_[0].begin(), g.offsets_[0].end() - 1),
      std::vector<std::size_t>(g.offsets_[1].begin(), g.offsets_[1].end() - 1)};
  for (const auto& e : edges) {
    g.adj_[0][fill[0][e.left]++] = e.right;
    g.adj_[1][fill[1][e.right]++] = e.left;
  }
  for (std::size_t s = 0; s < 2; ++s) {
    const auto& off = g.offsets_[s];
    for (std::size_t i = 0; i + 1 < off.size(); ++i) {
      auto first = g.adj_[s].begin() + static_cast<std::ptrdiff_t>(off[i]);
      auto last = g.adj_[s].begin() + static_cast<std::ptrdiff_t>(off[i + 1]);
      std::sort(first, last);
      if (auto dup = std::adjacent_find(first, last); dup != last) {
        const auto l = s == 0 ? i : *dup;
        const auto r = s == 0 ? *dup : i;
        throw DuplicateEdge("duplicate edge (" + std::to_string(l) + "," + std::to_string(r) + ")");
      }
      g.max_degree_ = std::max(g.max_degree_, off[i + 1] - off[i]);
    }
  }
  return g;
}

void BipartiteGraph::check(VertexRef v) const {
  if (!contains(v)) throw IndexOutOfBounds("vertex " + to_string(v) + " out of range");
}

std::span<const std::uint32_t> BipartiteGraph::neighbors(VertexRef v) const {
  check(v);
  const auto s = side_index(v.side);
  const auto& off = offsets_[s];
  return {adj_[s].data() + off[v.index], off[v.index + 1] - off[v.index]};
}

bool BipartiteGraph::has_edge(std::uint32_t left, std::uint32_t right) const {
  check({Side::Right, right});
  auto n = neighbors({Side::Left, left});
  return std::binary_search(n.begin(), n.end(), right);
}

std::vector<Edge> BipartiteGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (std::uint32_t l = 0; l < counts_[0]; ++l) {
    for (auto r : neighbors({Side::Left, l})) out.push_back({l, r});
  }
  return out;
}

std::vector<VertexRef> neighbors(const BipartiteGraph& g, VertexRef u) {
  std::vector<VertexRef> out;
  for (auto w : g.neighbors(u)) out.push_back({opposite(u.side), w});
  return out;
}

TwoHop two_hop(const BipartiteGraph& g, VertexRef u) {
  TwoHop out;
  std::vector<std::uint32_t> same;
  for (auto w : g.neighbors(u)) {
    for (auto x : g.neighbors({opposite(u.side), w})) {
      if (x != u.index) same.push_back(x);
    }
  }
  std::sort(same.begin(), same.end());
  same.erase(std::unique(same.begin(), same.end()), same.end());
  for (auto x : same) out.n2.push_back({u.side, x});
  out.n_le_2 = neighbors(g, u);
  out.n_le_2.insert(out.n_le_2.end(), out.n2.begin(), out.n2.end());
  std::sort(out.n_le_2.begin(), out.n_le_2.end());
  return out;
}

Biclique InducedSubgraph::to_parent(const Biclique& b) const {
  Biclique out;
  for (auto a : b.a_side) out.a_side.push_back(left_origin.at(a));
  for (auto v : b.b_side) out.b_side.push_back(right_origin.at(v));
  std::sort(out.a_side.begin(), out.a_side.end());
  std::sort(out.b_side.begin(), out.b_side.end());
  return out;
}

InducedSubgraph induced_subgraph(const BipartiteGraph& g, const VertexSubset& s) {
  InducedSubgraph out;
  out.left_origin = s.left;
  out.right_origin = s.right;
  for (auto* v : {&out.left_origin, &out.right_origin}) {
    std::sort(v->begin(), v->end());
    v->erase(std::unique(v->begin(), v->end()), v->end());
  }
  for (auto l : out.left_origin) g.check({Side::Left, l});
  for (auto r : out.right_origin) g.check({Side::Right, r});

  std::vector<std::int64_t> right_local(g.right_count(), -1);
  for (std::size_t j = 0; j < out.right_origin.size(); ++j) right_local[out.right_origin[j]] = static_cast<std::int64_t>(j);
  std::vector<Edge> edges;
  for (std::uint32_t i = 0; i < out.left_origin.size(); ++i) {
    for (auto r : g.neighbors({Side::Left, out.left_origin[i]})) {
      if (right_local[r] >= 0) edges.push_back({i, static_cast<std::uint32_t>(right_local[r])});
    }
  }
  out.graph = BipartiteGraph::from_edges(static_cast<std::uint32_t>(out.left_origin.size()),
                                         static_cast<std::uint32_t>(out.right_origin.size()), edges);
  return out;
}

BipartiteGraph bipartite_complement(const BipartiteGraph& g) {
  std::vector<Edge> edges;
  for (std::uint32_t l = 0; l < g.left_count(); ++l) {
    auto n = g.neighbors({Side::Left, l});
    auto it = n.begin();
    for (std::uint32_t r = 0; r < g.right_count(); ++r) {
      if (it != n.end() && *it == r) {
        ++it;
      } else {
        edges.push_back({l, r});
      }
    }
  }
  return BipartiteGraph::from_edges(g.left_count(), g.right_count(), edges);
}

BicliqueCheck validate_biclique(const BipartiteGraph& g, const Biclique& c) {
  for (auto a : c.a_side) g.check({Side::Left, a});
  for (auto b : c.b_side) g.check({Side::Right, b});
  BicliqueCheck out;
  out.is_biclique = true;
  for (auto a : c.a_side) {
    for (auto b : c.b_side) {
      if (!g.has_edge(a, b)) {
        out.is_biclique = false;
        return out;
      }
    }
  }
  auto sorted_unique = [](std::vector<std::uint32_t> v) {
    std::sort(v.begin(), v.end());
    return std::adjacent_find(v.begin(), v.end()) == v.end();
  };
  if (!sorted_unique(c.a_side) || !sorted_unique(c.b_side)) {
    out.is_biclique = false;
    return out;
  }
  out.is_balanced = c.a_side.size() == c.b_side.size();
  return out;
}

VertexSubset full_subset(const BipartiteGraph& g) {
  VertexSubset s;
  s.left.resize(g.left_count());
  s.right.resize(g.right_count());
  for (std::uint32_t i = 0; i < g.left_count(); ++i) s.left[i] = i;
  for (std::uint32_t j = 0; j < g.right_count(); ++j) s.right[j] = j;
  return s;
}

}  // namespace mbb
