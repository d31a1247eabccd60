#include "mbb/complement.hpp"

#include <algorithm>
#include <map>

namespace mbb {

const char* to_string(ComponentKind k) {
  switch (k) {
    case ComponentKind::OddPath: return "odd_path";
    case ComponentKind::EvenPath: return "even_path";
    case ComponentKind::Cycle: return "cycle";
  }
  return "?";
}

std::size_t ComplementComponent::count(Side s) const {
  return static_cast<std::size_t>(
      std::count_if(vertices.begin(), vertices.end(), [s](VertexRef v) { return v.side == s; }));
}

std::vector<std::pair<std::size_t, std::size_t>> InstanceTable::sizes() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& p : pairs) out.emplace_back(p.a, p.b);
  return out;
}

InstanceTable component_maximal_instances(const ComplementComponent& c) {
  const auto& vs = c.vertices;
  const std::size_t n = vs.size();
  const bool cycle = c.kind == ComponentKind::Cycle;
  // best[a] = (b, witness) over all independent selections with `a` left vertices
  std::map<std::size_t, std::pair<std::size_t, std::vector<VertexRef>>> best;
  if (n == 0) return {};

  struct Cell {
    int b = -1;
    std::uint8_t prev = 0;
  };
  // dp[i][chosen][a]
  std::vector<std::array<std::vector<Cell>, 2>> dp(n);
  for (int first = 0; first <= 1; ++first) {
    for (auto& layer : dp) {
      layer[0].assign(n + 1, Cell{});
      layer[1].assign(n + 1, Cell{});
    }
    const bool l0 = vs[0].side == Side::Left;
    if (first) {
      dp[0][1][l0 ? 1 : 0] = {l0 ? 0 : 1, 0};
    } else {
      dp[0][0][0] = {0, 0};
    }
    for (std::size_t i = 1; i < n; ++i) {
      const bool left = vs[i].side == Side::Left;
      const bool may_pick = !(cycle && first && i + 1 == n);
      for (std::uint8_t prev = 0; prev <= 1; ++prev) {
        for (std::size_t a = 0; a <= n; ++a) {
          const auto& cur = dp[i - 1][prev][a];
          if (cur.b < 0) continue;
          auto& skip = dp[i][0][a];
          if (cur.b > skip.b) skip = {cur.b, prev};
          if (prev == 0 && may_pick) {
            auto& take = dp[i][1][a + (left ? 1 : 0)];
            const int nb = cur.b + (left ? 0 : 1);
            if (nb > take.b) take = {nb, 0};
          }
        }
      }
    }
    for (std::uint8_t last = 0; last <= 1; ++last) {
      for (std::size_t a = 0; a <= n; ++a) {
        const auto& cell = dp[n - 1][last][a];
        if (cell.b < 0) continue;
        auto it = best.find(a);
        if (it != best.end() && it->second.first >= static_cast<std::size_t>(cell.b)) continue;
        std::vector<VertexRef> witness;
        std::size_t ca = a;
        std::uint8_t chosen = last;
        for (std::size_t i = n; i-- > 0;) {
          const auto prev = dp[i][chosen][ca].prev;
          if (chosen) {
            witness.push_back(vs[i]);
            if (vs[i].side == Side::Left) --ca;
          }
          chosen = prev;
        }
        std::sort(witness.begin(), witness.end());
        best[a] = {static_cast<std::size_t>(cell.b), std::move(witness)};
      }
    }
  }

  InstanceTable out;
  std::size_t best_b_above = 0;
  bool any_above = false;
  for (auto it = best.rbegin(); it != best.rend(); ++it) {
    const auto [b, witness] = it->second;
    if (!any_above || b > best_b_above) {
      out.pairs.push_back({it->first, b, witness});
      best_b_above = b;
      any_above = true;
    }
  }
  std::reverse(out.pairs.begin(), out.pairs.end());
  return out;
}

ComplementComponent make_path_component(std::size_t p, Side first) {
  ComplementComponent c;
  c.kind = p % 2 == 1 ? ComponentKind::OddPath : ComponentKind::EvenPath;
  c.edge_count = p;
  std::array<std::uint32_t, 2> next{0, 0};
  Side s = first;
  for (std::size_t i = 0; i <= p; ++i) {
    c.vertices.push_back({s, next[side_index(s)]++});
    s = opposite(s);
  }
  return c;
}

ComplementComponent make_cycle_component(std::size_t p) {
  ComplementComponent c;
  c.kind = ComponentKind::Cycle;
  c.edge_count = p;
  for (std::uint32_t i = 0; i < p; ++i) c.vertices.push_back({i % 2 == 0 ? Side::Left : Side::Right, i / 2});
  return c;
}

std::vector<std::pair<std::size_t, std::size_t>> printed_instance_formula(const ComplementComponent& c) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t p = c.edge_count;
  switch (c.kind) {
    case ComponentKind::OddPath: {
      const std::size_t m = (p + 1) / 2;
      for (std::size_t i = 0; i <= m; ++i) out.emplace_back(i, m - i);
      break;
    }
    case ComponentKind::EvenPath: {
      const std::size_t m = p / 2 + 1;
      if (c.count(Side::Left) < c.count(Side::Right)) {
        for (std::size_t i = 0; i + 2 <= m; ++i) out.emplace_back(i, m - i);
        out.emplace_back(m - 1, 0);
      } else {
        out.emplace_back(0, m - 1);
        for (std::size_t i = 2; i + 1 <= m; ++i) out.emplace_back(i, m - i);
        out.emplace_back(m, 0);
      }
      break;
    }
    case ComponentKind::Cycle: {
      const std::size_t h = p / 2;
      out.emplace_back(0, h);
      if (p > 4) {
        for (std::size_t i = 2; i + 1 <= h; ++i) out.emplace_back(i, h + 1 - i);
      }
      out.emplace_back(h, 0);
      break;
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace mbb
