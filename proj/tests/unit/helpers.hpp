#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "mbb/generator.hpp"
#include "mbb/graph.hpp"

namespace testutil {

using namespace mbb;

inline BipartiteGraph graph(std::uint32_t l, std::uint32_t r, std::vector<Edge> e) {
  return build_graph(l, r, e);
}

// l0-r0, l0-r1, l1-r0
inline BipartiteGraph gx() { return graph(2, 2, {{0, 0}, {0, 1}, {1, 0}}); }

inline BipartiteGraph complete(std::uint32_t l, std::uint32_t r) {
  std::vector<Edge> e;
  for (std::uint32_t i = 0; i < l; ++i)
    for (std::uint32_t j = 0; j < r; ++j) e.push_back({i, j});
  return graph(l, r, e);
}

inline BipartiteGraph complete_minus(std::uint32_t n, const std::vector<Edge>& gone) {
  std::vector<Edge> e;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j)
      if (std::find(gone.begin(), gone.end(), Edge{i, j}) == gone.end()) e.push_back({i, j});
  return graph(n, n, e);
}

inline BipartiteGraph k33_minus_matching() { return complete_minus(3, {{0, 0}, {1, 1}, {2, 2}}); }

inline BipartiteGraph random_graph(std::uint32_t l, std::uint32_t r, double d, std::uint64_t seed) {
  return generate_random({l, r, d, seed});
}

// random sizes in [1, max_side] and a density from the 0.05 grid
inline BipartiteGraph random_small(std::mt19937_64& rng, std::uint32_t max_side) {
  std::uniform_int_distribution<std::uint32_t> side(1, max_side);
  std::uniform_int_distribution<int> dens(1, 19);
  const auto l = side(rng);
  const auto r = side(rng);
  return random_graph(l, r, dens(rng) * 0.05, rng());
}

// |N<=2| of every vertex inside the graph induced by `alive`, from scratch
inline std::vector<std::size_t> naive_nle2(const BipartiteGraph& g, const std::vector<char>& alive) {
  std::vector<std::size_t> out(g.vertex_count(), 0);
  for (std::size_t id = 0; id < g.vertex_count(); ++id) {
    if (!alive[id]) continue;
    const auto u = g.from_global(id);
    std::set<std::size_t> seen;
    for (auto w : g.neighbors(u)) {
      const VertexRef wr{opposite(u.side), w};
      if (!alive[g.global_id(wr)]) continue;
      seen.insert(g.global_id(wr));
      for (auto x : g.neighbors(wr)) {
        const auto xid = g.global_id({u.side, x});
        if (xid != id && alive[xid]) seen.insert(xid);
      }
    }
    out[id] = seen.size();
  }
  return out;
}

inline std::size_t naive_deg(const BipartiteGraph& g, const std::vector<char>& alive, std::size_t id) {
  const auto u = g.from_global(id);
  std::size_t d = 0;
  for (auto w : g.neighbors(u)) d += alive[g.global_id({opposite(u.side), w})];
  return d;
}

struct NaivePeel {
  std::vector<VertexRef> order;
  std::vector<std::uint32_t> number;  // by global id
  std::uint32_t degeneracy = 0;
};

// bicore peel recomputing every |N<=2| after each removal, same tie-break
inline NaivePeel naive_bicore(const BipartiteGraph& g) {
  const auto n = g.vertex_count();
  std::vector<char> alive(n, 1);
  NaivePeel p;
  p.number.assign(n, 0);
  std::uint32_t running = 0;
  for (std::size_t step = 0; step < n; ++step) {
    const auto key = naive_nle2(g, alive);
    std::size_t best = n;
    for (std::size_t id = 0; id < n; ++id) {
      if (!alive[id]) continue;
      if (best == n || key[id] < key[best] ||
          (key[id] == key[best] && naive_deg(g, alive, id) < naive_deg(g, alive, best))) {
        best = id;
      }
    }
    running = std::max<std::uint32_t>(running, static_cast<std::uint32_t>(key[best]));
    p.number[best] = running;
    p.order.push_back(g.from_global(best));
    alive[best] = 0;
  }
  p.degeneracy = running;
  return p;
}

// core numbers by repeatedly stripping a minimum-degree vertex
inline std::vector<std::uint32_t> naive_core(const BipartiteGraph& g) {
  const auto n = g.vertex_count();
  std::vector<char> alive(n, 1);
  std::vector<std::uint32_t> core(n, 0);
  std::uint32_t running = 0;
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = n;
    for (std::size_t id = 0; id < n; ++id) {
      if (alive[id] && (best == n || naive_deg(g, alive, id) < naive_deg(g, alive, best))) best = id;
    }
    running = std::max<std::uint32_t>(running, static_cast<std::uint32_t>(naive_deg(g, alive, best)));
    core[best] = running;
    alive[best] = 0;
  }
  return core;
}

}  // namespace testutil
