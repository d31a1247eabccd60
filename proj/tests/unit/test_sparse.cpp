#include <algorithm>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "mbb/oracle.hpp"
#include "mbb/sparse_solver.hpp"

using namespace mbb;
using namespace testutil;

namespace {

// two vertex-disjoint copies of K2,2
BipartiteGraph two_squares() {
  return graph(4, 4, {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 2}, {2, 3}, {3, 2}, {3, 3}});
}

// sparse random graph with a planted K_{k,k}
BipartiteGraph planted(std::mt19937_64& rng, std::uint32_t n, double d, std::uint32_t k) {
  std::bernoulli_distribution coin(d);
  std::vector<Edge> e;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j)
      if ((i < k && j < k) || coin(rng)) e.push_back({i, j});
  return build_graph(n, n, e);
}

}  // namespace

TEST_CASE("h_mbb examples") {
  auto r = h_mbb(complete(3, 3));
  CHECK(r.best.per_side() == 3);
  CHECK(r.degeneracy == 3);
  CHECK(r.reduced.empty());
  CHECK(r.certified);

  r = h_mbb(gx());
  CHECK(r.best.per_side() == 1);
  CHECK(r.degeneracy == 1);
  CHECK(r.certified);

  r = h_mbb(graph(0, 0, {}));
  CHECK(r.best.per_side() == 0);
  CHECK(r.certified);
}

TEST_CASE("hbv_mbb stages on small examples") {
  auto rep = hbv_mbb(complete(3, 3));
  CHECK(rep.result.per_side() == 3);
  CHECK(rep.stage == Stage::S1);
  CHECK(rep.certified);
  CHECK_FALSE(rep.timeout_hit);

  rep = hbv_mbb(two_squares());
  CHECK(rep.result.per_side() == 2);
  CHECK(rep.certified);
}

TEST_CASE("bridge_mbb prunes both squares") {
  const auto g = two_squares();
  const auto reduced = induced_subgraph(g, full_subset(g));
  Incumbent inc;
  PipelineStats stats;
  const auto survivors = bridge_mbb(inc, reduced, {}, &stats);
  CHECK(inc.per_side() == 2);
  CHECK(survivors.empty());
  CHECK(stats.subgraphs_total == 8);
  CHECK(stats.subgraphs_pruned == 8);
  CHECK(validate_biclique(g, inc.best()).is_balanced);
}

TEST_CASE("verify_mbb on K3,3") {
  const auto g = complete(3, 3);
  const auto reduced = induced_subgraph(g, full_subset(g));
  const auto order = bicore_decompose(g).peel_order;
  const auto pos = order_positions(g, order);
  Incumbent inc;
  PipelineStats stats;
  verify_mbb(inc, reduced, {centered_subgraph(g, order, pos, 0)}, {}, &stats);
  CHECK(inc.per_side() == 3);
  CHECK(stats.subgraphs_searched == 1);
  CHECK(validate_biclique(g, inc.best()).is_balanced);
}

TEST_CASE("hbv_mbb matches the oracle") {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 400; ++it) {
    const auto g = random_small(rng, 12);
    const auto expected = brute_force_mbb(g).per_side();
    const auto rep = hbv_mbb(g);
    REQUIRE(rep.certified);
    REQUIRE(rep.result.per_side() == expected);
    REQUIRE(validate_biclique(g, rep.result).is_balanced);

    PipelineOptions par;
    par.threads = 4;
    REQUIRE(hbv_mbb(g, par).result.per_side() == expected);
    PipelineOptions global;
    global.scope = CenterScope::Global;
    REQUIRE(hbv_mbb(g, global).result.per_side() == expected);
  }
}

TEST_CASE("hbv_mbb on sparse graphs with a planted biclique") {
  std::mt19937_64 rng(12);
  for (int it = 0; it < 20; ++it) {
    const auto g = planted(rng, 200, 0.03, 5);
    PipelineOptions o;
    o.threads = 2;
    const auto rep = hbv_mbb(g, o);
    REQUIRE(rep.certified);
    REQUIRE(rep.result.per_side() >= 5);
    REQUIRE(validate_biclique(g, rep.result).is_balanced);
    // core bound: nothing above the degeneracy
    REQUIRE(rep.result.per_side() <= rep.stats.degeneracy);
  }
}

TEST_CASE("certified at S1 means the degeneracy is reached") {
  std::mt19937_64 rng(13);
  int seen = 0;
  for (int it = 0; it < 300; ++it) {
    const auto g = random_small(rng, 10);
    const auto r = h_mbb(g);
    if (!r.certified) continue;
    ++seen;
    REQUIRE(r.best.per_side() == r.degeneracy);
    REQUIRE(brute_force_mbb(g).per_side() == r.best.per_side());
  }
  CHECK(seen > 0);
}

TEST_CASE("an optimum lies inside the centered subgraph of its earliest vertex") {
  std::mt19937_64 rng(14);
  for (int it = 0; it < 300; ++it) {
    const auto g = random_small(rng, 10);
    const auto best = brute_force_mbb(g);
    if (best.per_side() == 0) continue;
    const auto order = bicore_decompose(g).peel_order;
    const auto pos = order_positions(g, order);
    std::size_t first = order.size();
    for (auto l : best.a_side) first = std::min(first, pos[g.global_id({Side::Left, l})]);
    for (auto r : best.b_side) first = std::min(first, pos[g.global_id({Side::Right, r})]);
    const auto h = centered_subgraph(g, order, pos, first);
    for (auto l : best.a_side) REQUIRE(h.members.contains({Side::Left, l}));
    for (auto r : best.b_side) REQUIRE(h.members.contains({Side::Right, r}));
  }
}

TEST_CASE("pruned subgraphs never hide a larger biclique") {
  std::mt19937_64 rng(15);
  for (int it = 0; it < 200; ++it) {
    const auto g = random_small(rng, 10);
    const auto order = bicore_decompose(g).peel_order;
    const auto pos = order_positions(g, order);
    for (std::size_t i = 0; i < order.size(); ++i) {
      const auto h = centered_subgraph(g, order, pos, i);
      const auto local = brute_force_mbb(h.sub.graph).per_side();
      REQUIRE(local <= core_decompose(h.sub.graph).degeneracy);
      REQUIRE(local <= std::min(h.members.left.size(), h.members.right.size()));
    }
  }
}

TEST_CASE("timeout keeps the best biclique found") {
  std::mt19937_64 rng(16);
  const auto g = planted(rng, 400, 0.2, 6);
  PipelineOptions o;
  o.timeout_secs = 0.0;
  const auto rep = hbv_mbb(g, o);
  CHECK(rep.timeout_hit);
  CHECK_FALSE(rep.certified);
  CHECK(validate_biclique(g, rep.result).is_balanced);
}
