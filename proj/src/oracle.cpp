#include "mbb/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "mbb/errors.hpp"

namespace mbb {

Biclique brute_force_mbb(const BipartiteGraph& g, const OracleLimits& limits) {
  const Side small = g.left_count() <= g.right_count() ? Side::Left : Side::Right;
  const Side big = opposite(small);
  const std::size_t ns = g.side_count(small);
  const std::size_t nb = g.side_count(big);
  if (g.vertex_count() > limits.max_vertices || ns > limits.max_side || nb > 64) {
    throw TooLarge("oracle limited to " + std::to_string(limits.max_vertices) + " vertices, smaller side " +
                   std::to_string(limits.max_side));
  }

  // adjacency rebuilt from the raw edge list
  std::vector<std::uint64_t> adj(ns, 0);
  for (const auto& e : g.edges()) {
    const auto s = small == Side::Left ? e.left : e.right;
    const auto b = small == Side::Left ? e.right : e.left;
    adj[s] |= std::uint64_t{1} << b;
  }
  const std::uint64_t all = nb == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << nb) - 1;

  std::size_t best_k = 0;
  std::uint64_t best_set = 0;
  std::uint64_t best_common = 0;
  for (std::uint64_t set = 1; set < (std::uint64_t{1} << ns); ++set) {
    const auto a = static_cast<std::size_t>(std::popcount(set));
    if (a <= best_k) continue;
    std::uint64_t common = all;
    for (std::uint64_t w = set; w; w &= w - 1) common &= adj[std::countr_zero(w)];
    const auto k = std::min(a, static_cast<std::size_t>(std::popcount(common)));
    if (k > best_k) {
      best_k = k;
      best_set = set;
      best_common = common;
    }
  }

  auto take = [&](std::uint64_t bits) {
    std::vector<std::uint32_t> out;
    for (; bits && out.size() < best_k; bits &= bits - 1) out.push_back(static_cast<std::uint32_t>(std::countr_zero(bits)));
    return out;
  };
  Biclique r;
  auto s_part = take(best_set);
  auto b_part = take(best_common);
  if (small == Side::Left) {
    r.a_side = std::move(s_part);
    r.b_side = std::move(b_part);
  } else {
    r.a_side = std::move(b_part);
    r.b_side = std::move(s_part);
  }
  return r;
}

InstanceTable brute_force_component_instances(const ComplementComponent& c) {
  const std::size_t n = c.vertices.size();
  if (c.edge_count > 20 || n > 21) throw TooLarge("component too large for enumeration");

  // complement edges join consecutive vertices (and last-first on a cycle)
  std::vector<std::pair<std::size_t, std::size_t>> bad;
  for (std::size_t i = 0; i + 1 < n; ++i) bad.emplace_back(i, i + 1);
  if (c.kind == ComponentKind::Cycle && n > 2) bad.emplace_back(n - 1, 0);

  std::vector<std::pair<std::size_t, std::size_t>> found;  // (a, b) -> mask index into masks
  std::vector<std::uint32_t> masks;
  for (std::uint32_t m = 0; m < (1U << n); ++m) {
    bool ok = true;
    for (auto [x, y] : bad) {
      if ((m >> x & 1U) && (m >> y & 1U)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    std::size_t a = 0, b = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (m >> i & 1U) (c.vertices[i].side == Side::Left ? a : b)++;
    }
    found.emplace_back(a, b);
    masks.push_back(m);
  }

  InstanceTable t;
  for (std::size_t i = 0; i < found.size(); ++i) {
    const auto [a, b] = found[i];
    bool dominated = false;
    for (const auto& [a2, b2] : found) {
      if (a2 >= a && b2 >= b && (a2 > a || b2 > b)) {
        dominated = true;
        break;
      }
    }
    if (dominated) continue;
    if (std::any_of(t.pairs.begin(), t.pairs.end(), [&](const Instance& x) { return x.a == a && x.b == b; })) continue;
    Instance inst{a, b, {}};
    for (std::size_t v = 0; v < n; ++v) {
      if (masks[i] >> v & 1U) inst.witness.push_back(c.vertices[v]);
    }
    t.pairs.push_back(std::move(inst));
  }
  std::sort(t.pairs.begin(), t.pairs.end(), [](const Instance& x, const Instance& y) { return x.a < y.a; });
  return t;
}

}  // namespace mbb
