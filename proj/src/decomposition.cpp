#include "mbb/decomposition.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace mbb {

namespace {

VertexSubset to_subset(const BipartiteGraph& g, const std::vector<char>& alive) {
  VertexSubset out;
  for (std::size_t id = 0; id < alive.size(); ++id) {
    if (!alive[id]) continue;
    auto v = g.from_global(id);
    out.of(v.side).push_back(v.index);
  }
  return out;
}

}  // namespace

DecompositionResult core_decompose(const BipartiteGraph& g) {
  const std::size_t n = g.vertex_count();
  DecompositionResult res;
  res.kind = DecompositionKind::Core;
  res.numbers[0].assign(g.left_count(), 0);
  res.numbers[1].assign(g.right_count(), 0);
  if (n == 0) return res;

  std::vector<std::size_t> deg(n), pos(n), vert(n);
  std::size_t md = 0;
  for (std::size_t id = 0; id < n; ++id) {
    deg[id] = g.degree(g.from_global(id));
    md = std::max(md, deg[id]);
  }
  std::vector<std::size_t> bin(md + 1, 0);
  for (auto d : deg) ++bin[d];
  std::size_t start = 0;
  for (auto& b : bin) {
    auto num = b;
    b = start;
    start += num;
  }
  for (std::size_t id = 0; id < n; ++id) {
    pos[id] = bin[deg[id]]++;
    vert[pos[id]] = id;
  }
  for (std::size_t d = md; d > 0; --d) bin[d] = bin[d - 1];
  bin[0] = 0;

  for (std::size_t i = 0; i < n; ++i) {
    const auto v = vert[i];
    const auto vr = g.from_global(v);
    res.peel_order.push_back(vr);
    for (auto w : g.neighbors(vr)) {
      const auto u = g.global_id({opposite(vr.side), w});
      if (deg[u] > deg[v]) {
        const auto du = deg[u];
        const auto pu = pos[u];
        const auto pw = bin[du];
        const auto other = vert[pw];
        if (u != other) {
          pos[u] = pw;
          vert[pu] = other;
          pos[other] = pu;
          vert[pw] = u;
        }
        ++bin[du];
        --deg[u];
      }
    }
  }
  for (std::size_t id = 0; id < n; ++id) {
    const auto v = g.from_global(id);
    res.numbers[side_index(v.side)][v.index] = static_cast<std::uint32_t>(deg[id]);
    res.degeneracy = std::max(res.degeneracy, static_cast<std::uint32_t>(deg[id]));
  }
  return res;
}

VertexSubset k_core_reduce(const BipartiteGraph& g, const VertexSubset& mask, std::uint32_t k) {
  const std::size_t n = g.vertex_count();
  std::vector<char> alive(n, 0);
  for (auto l : mask.left) alive[g.global_id({Side::Left, l})] = 1;
  for (auto r : mask.right) alive[g.global_id({Side::Right, r})] = 1;

  std::vector<std::uint32_t> deg(n, 0);
  std::vector<std::size_t> queue;
  for (std::size_t id = 0; id < n; ++id) {
    if (!alive[id]) continue;
    const auto v = g.from_global(id);
    for (auto w : g.neighbors(v)) deg[id] += alive[g.global_id({opposite(v.side), w})];
    if (deg[id] < k) queue.push_back(id);
  }
  for (auto id : queue) alive[id] = 2;  // 2 = queued for removal
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto v = g.from_global(queue[head]);
    alive[queue[head]] = 0;
    for (auto w : g.neighbors(v)) {
      const auto u = g.global_id({opposite(v.side), w});
      if (alive[u] == 1 && --deg[u] < k) {
        alive[u] = 2;
        queue.push_back(u);
      }
    }
  }
  return to_subset(g, alive);
}

namespace {

/// Buckets keyed by |N<=2|, each ordered by (|N|, global id).
class BicoreQueue {
 public:
  explicit BicoreQueue(std::size_t max_key) : buckets_(max_key + 1) {}

  void insert(std::uint32_t key1, std::uint32_t key2, std::uint32_t id) {
    buckets_[key1].insert({key2, id});
    lowest_ = std::min<std::size_t>(lowest_, key1);
  }
  void erase(std::uint32_t key1, std::uint32_t key2, std::uint32_t id) { buckets_[key1].erase({key2, id}); }

  std::uint32_t pop() {
    while (buckets_[lowest_].empty()) ++lowest_;
    auto it = buckets_[lowest_].begin();
    const auto id = it->second;
    buckets_[lowest_].erase(it);
    return id;
  }

 private:
  std::vector<std::set<std::pair<std::uint32_t, std::uint32_t>>> buckets_;
  std::size_t lowest_ = 0;
};

}  // namespace

DecompositionResult bicore_decompose(const BipartiteGraph& g, BicoreMode mode, BicoreTrace* trace) {
  const std::size_t n = g.vertex_count();
  DecompositionResult res;
  res.kind = DecompositionKind::Bicore;
  res.numbers[0].assign(g.left_count(), 0);
  res.numbers[1].assign(g.right_count(), 0);
  if (n == 0) return res;

  auto vid = [&](Side s, std::uint32_t i) { return static_cast<std::uint32_t>(g.global_id({s, i})); };

  // common[v][w] = number of alive common neighbours of same-side v and w
  std::vector<std::unordered_map<std::uint32_t, std::uint32_t>> common(n);
  std::vector<std::unordered_set<std::uint32_t>> stored;  // Literal mode only
  std::vector<std::uint32_t> deg(n), key1(n);
  {
    std::vector<std::uint32_t> count(n, 0);
    std::vector<std::uint32_t> touched;
    for (std::uint32_t id = 0; id < n; ++id) {
      const auto v = g.from_global(id);
      deg[id] = static_cast<std::uint32_t>(g.degree(v));
      for (auto w : g.neighbors(v)) {
        for (auto x : g.neighbors({opposite(v.side), w})) {
          const auto xid = vid(v.side, x);
          if (xid == id) continue;
          if (count[xid]++ == 0) touched.push_back(xid);
        }
      }
      auto& m = common[id];
      m.reserve(touched.size());
      for (auto x : touched) {
        m.emplace(x, count[x]);
        count[x] = 0;
      }
      touched.clear();
      key1[id] = deg[id] + static_cast<std::uint32_t>(m.size());
    }
  }
  if (mode == BicoreMode::Literal) {
    stored.resize(n);
    for (std::uint32_t id = 0; id < n; ++id) {
      const auto v = g.from_global(id);
      for (auto w : g.neighbors(v)) stored[id].insert(vid(opposite(v.side), w));
      for (const auto& [x, c] : common[id]) stored[id].insert(x);
    }
    common.clear();
  }

  std::uint32_t max_key = 0;
  for (auto k : key1) max_key = std::max(max_key, k);
  BicoreQueue queue(max_key);
  for (std::uint32_t id = 0; id < n; ++id) queue.insert(key1[id], deg[id], id);

  std::vector<char> alive(n, 1);
  std::vector<std::uint32_t> drop(n, 0);
  std::vector<std::uint32_t> affected;
  std::uint32_t k = 0;

  for (std::size_t step = 0; step < n; ++step) {
    const auto u = queue.pop();
    const auto ur = g.from_global(u);
    k = std::max(k, key1[u]);
    res.numbers[side_index(ur.side)][ur.index] = k;
    res.peel_order.push_back(ur);
    alive[u] = 0;

    affected.clear();
    for (auto w : g.neighbors(ur)) {
      const auto x = vid(opposite(ur.side), w);
      if (alive[x]) affected.push_back(x);
    }
    const auto direct = affected.size();
    if (mode == BicoreMode::Exact) {
      for (const auto& [x, c] : common[u]) affected.push_back(x);
    } else {
      for (auto x : stored[u]) {
        if (alive[x] && g.from_global(x).side == ur.side) affected.push_back(x);
      }
    }
    for (auto x : affected) queue.erase(key1[x], deg[x], x);

    for (std::size_t i = 0; i < direct; ++i) {
      const auto x = affected[i];
      --deg[x];
      --key1[x];
      ++drop[x];
    }
    if (mode == BicoreMode::Exact) {
      for (std::size_t i = direct; i < affected.size(); ++i) {
        const auto x = affected[i];
        common[x].erase(u);
        --key1[x];
        ++drop[x];
      }
      // pairs of u's neighbours lose one common neighbour
      for (std::size_t i = 0; i < direct; ++i) {
        for (std::size_t j = i + 1; j < direct; ++j) {
          const auto a = affected[i];
          const auto b = affected[j];
          auto it = common[a].find(b);
          if (--it->second == 0) {
            common[a].erase(it);
            common[b].erase(a);
            --key1[a];
            --key1[b];
            ++drop[a];
            ++drop[b];
          } else {
            --common[b][a];
          }
        }
      }
      common[u].clear();
    } else {
      for (auto x : affected) stored[x].erase(u);
      for (std::size_t i = direct; i < affected.size(); ++i) --key1[affected[i]];
      stored[u].clear();
    }

    for (auto x : affected) {
      queue.insert(key1[x], deg[x], x);
      if (trace) {
        trace->max_drop = std::max(trace->max_drop, drop[x]);
        if (drop[x] > 1) ++trace->multi_drop_events;
      }
      drop[x] = 0;
    }
  }
  res.degeneracy = k;
  return res;
}

VertexRef CenteredSubgraph::local_center() const {
  const auto& o = sub.origin(center.side);
  auto it = std::lower_bound(o.begin(), o.end(), center.index);
  return {center.side, static_cast<std::uint32_t>(it - o.begin())};
}

std::vector<std::size_t> order_positions(const BipartiteGraph& g, const std::vector<VertexRef>& order) {
  const std::size_t n = g.vertex_count();
  if (order.size() != n) throw InvalidOrder("order has " + std::to_string(order.size()) + " entries, graph has " +
                                            std::to_string(n) + " vertices");
  std::vector<std::size_t> pos(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!g.contains(order[i])) throw InvalidOrder("order contains invalid vertex " + to_string(order[i]));
    auto& p = pos[g.global_id(order[i])];
    if (p != n) throw InvalidOrder("order repeats vertex " + to_string(order[i]));
    p = i;
  }
  return pos;
}

CenteredSubgraph centered_subgraph(const BipartiteGraph& g, const std::vector<VertexRef>& order,
                                   const std::vector<std::size_t>& pos, std::size_t i, CenterScope scope) {
  CenteredSubgraph out;
  out.center = order.at(i);
  const auto c = out.center;
  const auto cpos = pos[g.global_id(c)];
  const auto other = opposite(c.side);

  auto& same = out.members.of(c.side);
  auto& opp = out.members.of(other);
  same.push_back(c.index);
  for (auto x : g.neighbors(c)) {
    const bool in_suffix = pos[g.global_id({other, x})] > cpos;
    if (in_suffix) opp.push_back(x);
    if (!in_suffix && scope == CenterScope::Suffix) continue;
    for (auto w : g.neighbors({other, x})) {
      if (pos[g.global_id({c.side, w})] > cpos) same.push_back(w);
    }
  }
  std::sort(same.begin(), same.end());
  same.erase(std::unique(same.begin(), same.end()), same.end());
  out.sub = induced_subgraph(g, out.members);
  return out;
}

std::vector<CenteredSubgraph> vertex_centered_subgraphs(const BipartiteGraph& g, const std::vector<VertexRef>& order,
                                                        CenterScope scope) {
  const auto pos = order_positions(g, order);
  std::vector<CenteredSubgraph> out;
  out.reserve(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) out.push_back(centered_subgraph(g, order, pos, i, scope));
  return out;
}

}  // namespace mbb
