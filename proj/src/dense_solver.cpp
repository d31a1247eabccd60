#include "mbb/dense_solver.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

namespace mbb {

DenseStats& DenseStats::operator+=(const DenseStats& o) {
  recursions += o.recursions;
  bound_prunes += o.bound_prunes;
  matching_prunes += o.matching_prunes;
  moved_all_connected += o.moved_all_connected;
  removed_low_degree += o.removed_low_degree;
  dp_calls += o.dp_calls;
  dp_improvements += o.dp_improvements;
  branch_nodes += o.branch_nodes;
  min_include_removed = std::min(min_include_removed, o.min_include_removed);
  min_exclude_removed = std::min(min_exclude_removed, o.min_exclude_removed);
  max_depth = std::max(max_depth, o.max_depth);
  invariant_violations += o.invariant_violations;
  return *this;
}

SearchState SearchState::root(const BipartiteGraph& g) {
  SearchState s;
  const auto all = full_subset(g);
  s.cand_a = all.left;
  s.cand_b = all.right;
  return s;
}

SearchState anchored_state(const BipartiteGraph& g, VertexRef center) {
  g.check(center);
  SearchState s;
  s.a_side = center.side;
  s.a = {center.index};
  for (std::uint32_t i = 0; i < g.side_count(center.side); ++i) {
    if (i != center.index) s.cand_a.push_back(i);
  }
  auto n = g.neighbors(center);
  s.cand_b.assign(n.begin(), n.end());
  return s;
}

DenseSolver::DenseSolver(const BipartiteGraph& g, DenseOptions opts) : opts_(opts) {
  counts_ = {g.left_count(), g.right_count()};
  for (Side s : {Side::Left, Side::Right}) {
    auto& rows = rows_[side_index(s)];
    rows.assign(g.side_count(s), Bitset(g.side_count(opposite(s))));
    for (std::uint32_t v = 0; v < g.side_count(s); ++v) {
      for (auto w : g.neighbors({s, v})) rows[v].set(w);
    }
  }
}

DenseSolver::State DenseSolver::to_bits(const SearchState& s) const {
  const Side as = s.a_side;
  const Side bs = opposite(as);
  State st;
  st.a_side = as;
  st.a = Bitset(counts_[side_index(as)]);
  st.ca = Bitset(counts_[side_index(as)]);
  st.b = Bitset(counts_[side_index(bs)]);
  st.cb = Bitset(counts_[side_index(bs)]);
  auto fill = [](Bitset& bits, const std::vector<std::uint32_t>& v, Side side) {
    for (auto i : v) {
      if (i >= bits.bits()) throw IndexOutOfBounds("vertex " + to_string(VertexRef{side, i}) + " out of range");
      bits.set(i);
    }
  };
  fill(st.a, s.a, as);
  fill(st.ca, s.cand_a, as);
  fill(st.b, s.b, bs);
  fill(st.cb, s.cand_b, bs);
  st.na = st.a.count();
  st.nb = st.b.count();

  Bitset overlap = st.a;
  overlap &= st.ca;
  Bitset overlap_b = st.b;
  overlap_b &= st.cb;
  if (overlap.any() || overlap_b.any()) throw PreconditionViolated("partial and candidate sets overlap");
  if (!invariant_holds(st)) {
    throw PreconditionViolated("search state violates the biclique/candidate adjacency invariant");
  }
  return st;
}

bool DenseSolver::invariant_holds(const State& s) const {
  bool ok = true;
  const Side bs = opposite(s.a_side);
  s.a.for_each([&](std::size_t u) { ok = ok && s.b.count_and_not(row(s.a_side, u)) == 0; });
  s.ca.for_each([&](std::size_t u) { ok = ok && s.b.count_and_not(row(s.a_side, u)) == 0; });
  s.cb.for_each([&](std::size_t v) { ok = ok && s.a.count_and_not(row(bs, v)) == 0; });
  return ok;
}

SearchState DenseSolver::from_bits(const State& s) const {
  SearchState out;
  out.a_side = s.a_side;
  out.a = s.a.to_vector();
  out.b = s.b.to_vector();
  out.cand_a = s.ca.to_vector();
  out.cand_b = s.cb.to_vector();
  return out;
}

Biclique DenseSolver::to_biclique(const Bitset& a, const Bitset& b, Side a_side) const {
  Biclique out;
  if (a_side == Side::Left) {
    out.a_side = a.to_vector();
    out.b_side = b.to_vector();
  } else {
    out.a_side = b.to_vector();
    out.b_side = a.to_vector();
  }
  return out;
}

bool DenseSolver::bound(const State& s, std::size_t best) const {
  const auto reach = std::min(s.na + s.ca.count(), s.nb + s.cb.count());
  return 2 * reach < 2 * best;
}

bool DenseSolver::hopeless(const State& s, std::size_t best) const {
  return std::min(s.na + s.ca.count(), s.nb + s.cb.count()) <= best;
}

// Maximum matching of the bipartite complement restricted to C_A x C_B
// (greedy start, then augmenting paths over bit rows). A biclique is an
// independent set there, so it holds at most |C_A| + |C_B| - matching
// candidates.
std::size_t DenseSolver::complement_matching(const State& s, std::size_t enough) const {
  const Side as = s.a_side;
  const std::size_t nb = counts_[side_index(opposite(as))];
  const std::size_t words = s.cb.word_count();
  thread_local std::vector<std::uint32_t> mate_a, mate_b, stack;
  thread_local std::vector<std::uint64_t> seen;
  mate_a.assign(counts_[side_index(as)], UINT32_MAX);
  mate_b.assign(nb, UINT32_MAX);
  seen.assign(words, 0);
  const std::uint64_t* cb = s.cb.data();
  std::size_t size = 0;

  // lowest complement neighbour of u in C_B outside `seen`, or UINT32_MAX
  auto next_free = [&](std::size_t u, bool use_seen) -> std::uint32_t {
    const std::uint64_t* r = row(as, u).data();
    for (std::size_t i = 0; i < words; ++i) {
      std::uint64_t w = cb[i] & ~r[i];
      if (use_seen) w &= ~seen[i];
      if (w) return static_cast<std::uint32_t>(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
    }
    return UINT32_MAX;
  };

  s.ca.for_each([&](std::size_t u) {
    const std::uint64_t* r = row(as, u).data();
    for (std::size_t i = 0; i < words && mate_a[u] == UINT32_MAX; ++i) {
      std::uint64_t w = cb[i] & ~r[i];
      while (w) {
        const auto x = i * 64 + static_cast<std::size_t>(std::countr_zero(w));
        w &= w - 1;
        if (mate_b[x] == UINT32_MAX) {
          mate_a[u] = static_cast<std::uint32_t>(x);
          mate_b[x] = static_cast<std::uint32_t>(u);
          ++size;
          break;
        }
      }
    }
  });
  if (size >= enough) return size;

  // iterative DFS; stack[k+1] is the mate of the B vertex reached from stack[k]
  s.ca.for_each([&](std::size_t root) {
    if (mate_a[root] != UINT32_MAX || size >= enough) return;
    std::fill(seen.begin(), seen.end(), 0);
    stack.assign(1, static_cast<std::uint32_t>(root));
    while (!stack.empty()) {
      const auto u = stack.back();
      const auto w = next_free(u, true);
      if (w == UINT32_MAX) {
        stack.pop_back();
        continue;
      }
      seen[w >> 6] |= std::uint64_t{1} << (w & 63);
      if (mate_b[w] == UINT32_MAX) {
        // flip the path root .. u -> w
        auto cur_w = w;
        for (std::size_t k = stack.size(); k-- > 0;) {
          const auto a = stack[k];
          const auto prev = mate_a[a];
          mate_a[a] = cur_w;
          mate_b[cur_w] = a;
          cur_w = prev;
        }
        ++size;
        break;
      }
      stack.push_back(mate_b[w]);
    }
  });
  return size;
}

bool DenseSolver::matching_hopeless(const State& s, std::size_t best) const {
  const std::size_t ca = s.ca.count();
  const std::size_t cb = s.cb.count();
  const std::size_t total = s.na + s.nb + ca + cb;
  if (total < 2 * (best + 1)) return true;
  // pruning needs a matching of this size; a perfect one may still be too small
  const std::size_t enough = total - 2 * (best + 1) + 1;
  if (std::min(ca, cb) < enough) return false;
  return complement_matching(s, enough) >= enough;
}

bool DenseSolver::bounding_check(const SearchState& s, const Incumbent& inc) const {
  return bound(to_bits(s), inc.per_side());
}

void DenseSolver::reduce_bits(State& s, const Incumbent& inc) {
  const Side as = s.a_side;
  const Side bs = opposite(as);
  bool changed = true;
  while (changed) {
    changed = false;
    const std::size_t need = inc.per_side() + 1;  // per-side size of any improvement
    {
      const Bitset snapshot = s.ca;
      snapshot.for_each([&](std::size_t u) {
        if (!s.ca.test(u)) return;
        const auto& r = row(as, u);
        if (s.cb.count_and_not(r) == 0) {
          s.ca.reset(u);
          s.a.set(u);
          ++s.na;
          ++stats_.moved_all_connected;
          changed = true;
        } else if (need > s.nb && s.cb.count_and(r) < need - s.nb) {
          s.ca.reset(u);
          ++stats_.removed_low_degree;
          changed = true;
        }
      });
    }
    {
      const Bitset snapshot = s.cb;
      snapshot.for_each([&](std::size_t v) {
        if (!s.cb.test(v)) return;
        const auto& r = row(bs, v);
        if (s.ca.count_and_not(r) == 0) {
          s.cb.reset(v);
          s.b.set(v);
          ++s.nb;
          ++stats_.moved_all_connected;
          changed = true;
        } else if (need > s.na && s.ca.count_and(r) < need - s.na) {
          s.cb.reset(v);
          ++stats_.removed_low_degree;
          changed = true;
        }
      });
    }
  }
}

SearchState DenseSolver::reduce(const SearchState& s, const Incumbent& inc) {
  auto st = to_bits(s);
  reduce_bits(st, inc);
  return from_bits(st);
}

std::size_t DenseSolver::missing(const State& s, Side side, std::size_t v) const {
  const auto& other = side == s.a_side ? s.cb : s.ca;
  return other.count_and_not(row(side, v));
}

bool DenseSolver::poly_bits(const State& s) const {
  bool ok = true;
  const Side bs = opposite(s.a_side);
  s.ca.for_each([&](std::size_t u) { ok = ok && missing(s, s.a_side, u) <= 2; });
  if (!ok) return false;
  s.cb.for_each([&](std::size_t v) { ok = ok && missing(s, bs, v) <= 2; });
  return ok;
}

bool DenseSolver::poly_case_check(const SearchState& s) const { return poly_bits(to_bits(s)); }

std::optional<VertexRef> DenseSolver::branch_vertex_bits(const State& s) const {
  std::optional<VertexRef> best;
  std::size_t best_missing = 2;
  for (Side side : {Side::Left, Side::Right}) {
    const auto& cands = side == s.a_side ? s.ca : s.cb;
    cands.for_each([&](std::size_t v) {
      const auto m = missing(s, side, v);
      if (m > best_missing) {
        best_missing = m;
        best = VertexRef{side, static_cast<std::uint32_t>(v)};
      }
    });
  }
  return best;
}

std::optional<VertexRef> DenseSolver::select_branch_vertex(const SearchState& s) const {
  return branch_vertex_bits(to_bits(s));
}

ComplementDecomposition DenseSolver::components_bits(const State& s) const {
  const std::size_t nl = counts_[0];
  auto gid = [nl](VertexRef v) { return v.side == Side::Left ? v.index : nl + v.index; };
  auto from_gid = [nl](std::size_t id) {
    return id < nl ? VertexRef{Side::Left, static_cast<std::uint32_t>(id)}
                   : VertexRef{Side::Right, static_cast<std::uint32_t>(id - nl)};
  };

  // complement adjacency restricted to candidates, at most two per vertex
  std::vector<std::array<std::size_t, 2>> cadj(nl + counts_[1]);
  std::vector<std::uint8_t> cdeg(nl + counts_[1], 0);
  std::vector<std::size_t> members;  // candidate gids in (side, index) order
  for (Side side : {Side::Left, Side::Right}) {
    const bool is_a = side == s.a_side;
    const auto& cands = is_a ? s.ca : s.cb;
    const auto& other = is_a ? s.cb : s.ca;
    cands.for_each([&](std::size_t v) {
      const VertexRef vr{side, static_cast<std::uint32_t>(v)};
      const auto id = gid(vr);
      members.push_back(id);
      Bitset miss = other;
      miss.and_not(row(side, v));
      if (miss.count() > 2) {
        throw PreconditionViolated("candidate " + to_string(vr) + " misses more than two opposite candidates");
      }
      miss.for_each([&](std::size_t w) { cadj[id][cdeg[id]++] = gid({opposite(side), static_cast<std::uint32_t>(w)}); });
    });
  }

  ComplementDecomposition out;
  std::vector<char> seen(nl + counts_[1], 0);
  auto walk = [&](std::size_t start, ComplementComponent& comp) {
    std::size_t prev = SIZE_MAX;
    std::size_t cur = start;
    while (true) {
      seen[cur] = 1;
      comp.vertices.push_back(from_gid(cur));
      std::size_t next = SIZE_MAX;
      for (std::uint8_t k = 0; k < cdeg[cur]; ++k) {
        const auto w = cadj[cur][k];
        if (w != prev && !seen[w]) {
          next = w;
          break;
        }
      }
      if (next == SIZE_MAX) break;
      prev = cur;
      cur = next;
    }
  };
  for (auto id : members) {
    if (cdeg[id] == 0) {
      const auto v = from_gid(id);
      out.trivial.of(v.side).push_back(v.index);
      seen[id] = 1;
    }
  }
  for (auto id : members) {
    if (seen[id] || cdeg[id] != 1) continue;
    ComplementComponent comp;
    walk(id, comp);
    comp.edge_count = comp.vertices.size() - 1;
    comp.kind = comp.edge_count % 2 == 1 ? ComponentKind::OddPath : ComponentKind::EvenPath;
    out.components.push_back(std::move(comp));
  }
  for (auto id : members) {
    if (seen[id]) continue;
    ComplementComponent comp;
    walk(id, comp);
    comp.edge_count = comp.vertices.size();
    comp.kind = ComponentKind::Cycle;
    out.components.push_back(std::move(comp));
  }
  return out;
}

ComplementDecomposition DenseSolver::complement_components(const SearchState& s) const {
  return components_bits(to_bits(s));
}

std::optional<Biclique> DenseSolver::dynamic_bits(const State& s, const Incumbent& inc) {
  ++stats_.dp_calls;
  const auto decomp = components_bits(s);
  const Side as = s.a_side;
  const Side bs = opposite(as);

  const std::size_t rows = s.na + s.ca.count() + 1;
  const std::size_t cols = s.nb + s.cb.count() + 1;
  const std::size_t i0 = s.na + decomp.trivial.of(as).size();
  const std::size_t j0 = s.nb + decomp.trivial.of(bs).size();

  // instance sizes in (A-role, B-role) orientation
  struct RoleInstance {
    std::size_t x, y;
  };
  std::vector<InstanceTable> tables;
  std::vector<std::vector<RoleInstance>> role_sizes;
  tables.reserve(decomp.components.size());
  for (const auto& comp : decomp.components) {
    tables.push_back(component_maximal_instances(comp));
    auto& rs = role_sizes.emplace_back();
    for (const auto& p : tables.back().pairs) {
      rs.push_back(as == Side::Left ? RoleInstance{p.a, p.b} : RoleInstance{p.b, p.a});
    }
  }

  // t[cell] = stage marker, 0 = unreachable; base marked 1. A cell marked m
  // absorbed components 0..m-2. parent[m][cell] = (source cell, instance).
  using Cell = std::uint32_t;
  std::vector<std::uint32_t> t(rows * cols, 0);
  std::vector<std::unordered_map<Cell, std::pair<Cell, std::uint32_t>>> parent(tables.size() + 2);
  auto at = [cols](std::size_t i, std::size_t j) { return static_cast<Cell>(i * cols + j); };
  t[at(i0, j0)] = 1;
  std::vector<Cell> frontier{at(i0, j0)};
  for (std::size_t p = 1; p <= tables.size(); ++p) {
    std::vector<Cell> next;
    const auto& inst = role_sizes[p - 1];
    for (auto cell : frontier) {
      const std::size_t i = cell / cols;
      const std::size_t j = cell % cols;
      for (std::uint32_t k = 0; k < inst.size(); ++k) {
        const auto target = at(i + inst[k].x, j + inst[k].y);
        if (t[target] != p + 1) {
          t[target] = static_cast<std::uint32_t>(p + 1);
          parent[p + 1][target] = {cell, k};
          next.push_back(target);
        }
      }
    }
    frontier = std::move(next);
  }

  std::size_t best = 0;
  std::optional<Cell> best_cell;
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (t[at(i, j)] == 0) continue;
      const auto m = std::min(i, j);
      if (!best_cell || m > best) {
        best = m;
        best_cell = at(i, j);
      }
    }
  }
  if (!best_cell || best <= inc.per_side()) return std::nullopt;

  Bitset a = s.a;
  Bitset b = s.b;
  for (auto v : decomp.trivial.of(as)) a.set(v);
  for (auto v : decomp.trivial.of(bs)) b.set(v);
  Cell cell = *best_cell;
  for (auto m = t[cell]; m > 1; --m) {
    const auto [src, k] = parent[m].at(cell);
    for (auto v : tables[m - 2].pairs[k].witness) (v.side == as ? a : b).set(v.index);
    cell = src;
  }
  auto out = to_biclique(a, b, as);
  out.make_balanced();
  ++stats_.dp_improvements;
  return out;
}

std::optional<Biclique> DenseSolver::dynamic_mbb(const SearchState& s, const Incumbent& inc) {
  return dynamic_bits(to_bits(s), inc);
}

void DenseSolver::tick(std::uint32_t depth) {
  ++stats_.recursions;
  stats_.max_depth = std::max(stats_.max_depth, depth);
  if (depth > opts_.max_depth) throw DepthLimitExceeded("recursion depth limit " + std::to_string(opts_.max_depth));
  if (opts_.deadline && (stats_.recursions & 255) == 0 && std::chrono::steady_clock::now() > *opts_.deadline) {
    throw Timeout("search deadline reached");
  }
}

void DenseSolver::dense_mbb(const SearchState& s, Incumbent& inc) { dense_rec(to_bits(s), inc, 0); }

void DenseSolver::dense_rec(State s, Incumbent& inc, std::uint32_t depth) {
  tick(depth);
  if (opts_.check_invariants && !invariant_holds(s)) ++stats_.invariant_violations;
  if (hopeless(s, inc.per_side())) {
    ++stats_.bound_prunes;
    return;
  }
  reduce_bits(s, inc);
  if (hopeless(s, inc.per_side())) {
    ++stats_.bound_prunes;
    return;
  }
  if (opts_.matching_bound && matching_hopeless(s, inc.per_side())) {
    ++stats_.matching_prunes;
    return;
  }
  if (poly_bits(s)) {
    if (auto found = dynamic_bits(s, inc)) inc.offer(std::move(*found));
    return;
  }

  const auto u = *branch_vertex_bits(s);
  ++stats_.branch_nodes;
  const std::size_t before = s.ca.count() + s.cb.count();
  const Side bs = opposite(s.a_side);

  State take;
  take.a_side = bs;
  if (u.side == s.a_side) {
    // (B, A ∪ {u}), (C_B ∩ N(u), C_A \ {u})
    take.a = s.b;
    take.na = s.nb;
    take.b = s.a;
    take.b.set(u.index);
    take.nb = s.na + 1;
    take.ca = s.cb;
    take.ca &= row(u.side, u.index);
    take.cb = s.ca;
    take.cb.reset(u.index);
  } else {
    // (B ∪ {u}, A), (C_B \ {u}, C_A ∩ N(u))
    take.a = s.b;
    take.a.set(u.index);
    take.na = s.nb + 1;
    take.b = s.a;
    take.nb = s.na;
    take.ca = s.cb;
    take.ca.reset(u.index);
    take.cb = s.ca;
    take.cb &= row(u.side, u.index);
  }
  stats_.min_include_removed = std::min<std::uint64_t>(stats_.min_include_removed, before - (take.ca.count() + take.cb.count()));
  stats_.min_exclude_removed = std::min<std::uint64_t>(stats_.min_exclude_removed, 1);

  dense_rec(std::move(take), inc, depth + 1);
  (u.side == s.a_side ? s.ca : s.cb).reset(u.index);
  dense_rec(std::move(s), inc, depth + 1);
}

void DenseSolver::basic_bb(const SearchState& s, Incumbent& inc) { basic_rec(to_bits(s), inc, 0); }

void DenseSolver::basic_rec(State s, Incumbent& inc, std::uint32_t depth) {
  tick(depth);
  if (opts_.check_invariants && !invariant_holds(s)) ++stats_.invariant_violations;
  if (hopeless(s, inc.per_side())) {
    ++stats_.bound_prunes;
    return;
  }
  if (s.ca.none()) {
    if (std::min(s.na, s.nb) > inc.per_side()) inc.offer(to_biclique(s.a, s.b, s.a_side));
    return;
  }
  const std::size_t u = s.ca.first();

  State take;
  take.a_side = opposite(s.a_side);
  take.a = s.b;
  take.na = s.nb;
  take.b = s.a;
  take.b.set(u);
  take.nb = s.na + 1;
  take.ca = s.cb;
  take.ca &= row(s.a_side, u);
  take.cb = s.ca;
  take.cb.reset(u);
  basic_rec(std::move(take), inc, depth + 1);

  s.ca.reset(u);
  basic_rec(std::move(s), inc, depth + 1);
}

}  // namespace mbb
