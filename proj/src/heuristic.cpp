#include "mbb/heuristic.hpp"

#include <algorithm>
#include <array>

#include "mbb/decomposition.hpp"

namespace mbb {

const char* to_string(HeuristicStrategy s) {
  switch (s) {
    case HeuristicStrategy::MaxDegree: return "max_degree";
    case HeuristicStrategy::MaxCore: return "max_core";
    case HeuristicStrategy::MaxLocalCore: return "max_local_core";
  }
  return "?";
}

namespace {

Biclique grow_from(const BipartiteGraph& g, const std::vector<char>& in_mask, const std::vector<std::uint32_t>& score,
                   VertexRef seed) {
  const Side seed_side = seed.side;
  std::array<std::vector<std::uint32_t>, 2> chosen;
  chosen[side_index(seed_side)].push_back(seed.index);

  // candidates per side; every candidate is adjacent to all chosen vertices
  // of the other side
  std::array<std::vector<char>, 2> cand{std::vector<char>(g.left_count(), 0), std::vector<char>(g.right_count(), 0)};
  for (std::uint32_t i = 0; i < g.side_count(seed_side); ++i) {
    const VertexRef v{seed_side, i};
    cand[side_index(seed_side)][i] = in_mask[g.global_id(v)] && i != seed.index;
  }
  for (auto w : g.neighbors(seed)) {
    cand[side_index(opposite(seed_side))][w] = in_mask[g.global_id({opposite(seed_side), w})];
  }

  Side turn = opposite(seed_side);
  while (true) {
    auto& c = cand[side_index(turn)];
    std::int64_t pick = -1;
    for (std::uint32_t i = 0; i < c.size(); ++i) {
      if (!c[i]) continue;
      if (pick < 0 || score[g.global_id({turn, i})] > score[g.global_id({turn, static_cast<std::uint32_t>(pick)})]) {
        pick = i;
      }
    }
    if (pick < 0) break;
    const VertexRef v{turn, static_cast<std::uint32_t>(pick)};
    chosen[side_index(turn)].push_back(v.index);
    c[v.index] = 0;
    auto& other = cand[side_index(opposite(turn))];
    std::vector<char> keep(other.size(), 0);
    for (auto w : g.neighbors(v)) keep[w] = other[w];
    other.swap(keep);
    turn = opposite(turn);
  }
  Biclique b{chosen[0], chosen[1]};
  b.make_balanced();
  return b;
}

}  // namespace

Biclique greedy_balanced_biclique(const BipartiteGraph& g, const VertexSubset& mask, HeuristicStrategy strategy,
                                  unsigned top_r) {
  const std::size_t n = g.vertex_count();
  std::vector<char> in_mask(n, 0);
  for (auto l : mask.left) in_mask[g.global_id({Side::Left, l})] = 1;
  for (auto r : mask.right) in_mask[g.global_id({Side::Right, r})] = 1;

  std::vector<std::uint32_t> score(n, 0);
  if (strategy == HeuristicStrategy::MaxDegree) {
    for (std::size_t id = 0; id < n; ++id) {
      if (!in_mask[id]) continue;
      const auto v = g.from_global(id);
      for (auto w : g.neighbors(v)) score[id] += in_mask[g.global_id({opposite(v.side), w})];
    }
  } else {
    const auto sub = induced_subgraph(g, mask);
    const auto core = core_decompose(sub.graph);
    for (Side s : {Side::Left, Side::Right}) {
      for (std::uint32_t i = 0; i < sub.graph.side_count(s); ++i) {
        score[g.global_id(sub.to_parent(VertexRef{s, i}))] = core.number_of({s, i});
      }
    }
  }

  std::vector<std::size_t> seeds;
  for (std::size_t id = 0; id < n; ++id) {
    if (in_mask[id]) seeds.push_back(id);
  }
  const std::size_t r = std::min<std::size_t>(std::max(top_r, 1U), seeds.size());
  std::partial_sort(seeds.begin(), seeds.begin() + static_cast<std::ptrdiff_t>(r), seeds.end(),
                    [&](std::size_t a, std::size_t b) { return score[a] != score[b] ? score[a] > score[b] : a < b; });

  Biclique best;
  for (std::size_t i = 0; i < r; ++i) {
    auto b = grow_from(g, in_mask, score, g.from_global(seeds[i]));
    if (b.per_side() > best.per_side()) best = std::move(b);
  }
  return best;
}

}  // namespace mbb
