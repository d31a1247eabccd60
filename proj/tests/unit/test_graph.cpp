#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "mbb/errors.hpp"

using namespace mbb;
using namespace testutil;

TEST_CASE("build_graph") {
  const auto g = gx();
  CHECK(g.edge_count() == 3);
  CHECK(g.max_degree() == 2);

  const auto empty = graph(0, 0, {});
  CHECK(empty.vertex_count() == 0);
  CHECK(empty.edge_count() == 0);

  CHECK_THROWS_AS(graph(2, 2, {{0, 0}, {0, 0}}), DuplicateEdge);
  CHECK_THROWS_AS(graph(2, 2, {{2, 0}}), IndexOutOfBounds);
  CHECK_THROWS_AS(graph(2, 2, {{0, 5}}), IndexOutOfBounds);
}

TEST_CASE("neighbors") {
  const auto g = gx();
  CHECK(neighbors(g, {Side::Left, 0}) == std::vector<VertexRef>{{Side::Right, 0}, {Side::Right, 1}});
  CHECK(neighbors(g, {Side::Right, 1}) == std::vector<VertexRef>{{Side::Left, 0}});
  const auto iso = graph(2, 1, {{0, 0}});
  CHECK(neighbors(iso, {Side::Left, 1}).empty());
  CHECK_THROWS_AS(neighbors(g, {Side::Left, 2}), IndexOutOfBounds);
}

TEST_CASE("two_hop") {
  const auto g = gx();
  auto t = two_hop(g, {Side::Left, 0});
  CHECK(t.n2 == std::vector<VertexRef>{{Side::Left, 1}});
  CHECK(t.n_le_2 == std::vector<VertexRef>{{Side::Left, 1}, {Side::Right, 0}, {Side::Right, 1}});

  const auto e = graph(1, 1, {{0, 0}});
  t = two_hop(e, {Side::Left, 0});
  CHECK(t.n2.empty());
  CHECK(t.n_le_2 == std::vector<VertexRef>{{Side::Right, 0}});

  t = two_hop(g, {Side::Right, 1});
  CHECK(t.n2 == std::vector<VertexRef>{{Side::Right, 0}});
  CHECK(t.n_le_2 == std::vector<VertexRef>{{Side::Left, 0}, {Side::Right, 0}});
  CHECK_THROWS_AS(two_hop(g, {Side::Right, 7}), IndexOutOfBounds);
}

TEST_CASE("induced_subgraph") {
  const auto g = gx();
  CHECK(induced_subgraph(g, {{0}, {0, 1}}).graph.edge_count() == 2);
  CHECK(induced_subgraph(g, {}).graph.vertex_count() == 0);
  CHECK(induced_subgraph(g, {{1}, {1}}).graph.edge_count() == 0);
  CHECK_THROWS_AS(induced_subgraph(g, {{3}, {}}), IndexOutOfBounds);

  const auto sub = induced_subgraph(g, {{1}, {0}});
  CHECK(sub.to_parent(VertexRef{Side::Left, 0}) == VertexRef{Side::Left, 1});
  CHECK(sub.graph.has_edge(0, 0));
}

TEST_CASE("bipartite_complement") {
  const auto c = bipartite_complement(gx());
  CHECK(c.edges() == std::vector<Edge>{{1, 1}});
  CHECK(bipartite_complement(complete(2, 2)).edge_count() == 0);
  CHECK(bipartite_complement(graph(2, 2, {})) == complete(2, 2));
}

TEST_CASE("validate_biclique") {
  const auto g = gx();
  auto v = validate_biclique(g, {{0}, {0, 1}});
  CHECK((v.is_biclique && !v.is_balanced));
  v = validate_biclique(g, {{0, 1}, {1}});
  CHECK((!v.is_biclique && !v.is_balanced));
  v = validate_biclique(g, {{0}, {0}});
  CHECK((v.is_biclique && v.is_balanced));
  CHECK_THROWS_AS(validate_biclique(g, {{4}, {0}}), IndexOutOfBounds);
}

TEST_CASE("make_balanced trims the highest indices") {
  Biclique b{{3, 1, 2}, {0}};
  b.make_balanced();
  CHECK(b.a_side == std::vector<std::uint32_t>{1});
  CHECK(b.b_side == std::vector<std::uint32_t>{0});
}

TEST_CASE("random graph properties") {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 200; ++it) {
    const auto g = random_small(rng, 12);
    // symmetry
    for (std::uint32_t l = 0; l < g.left_count(); ++l) {
      for (auto r : g.neighbors({Side::Left, l})) {
        const auto back = g.neighbors({Side::Right, r});
        REQUIRE(std::find(back.begin(), back.end(), l) != back.end());
      }
    }
    // complement involution and edge count
    const auto c = bipartite_complement(g);
    REQUIRE(bipartite_complement(c) == g);
    REQUIRE(g.edge_count() + c.edge_count() == std::size_t{g.left_count()} * g.right_count());
    // two-hop shape
    for (std::size_t id = 0; id < g.vertex_count(); ++id) {
      const auto u = g.from_global(id);
      const auto t = two_hop(g, u);
      const auto n = neighbors(g, u);
      for (const auto& w : t.n2) {
        REQUIRE(w.side == u.side);
        REQUIRE(w != u);
        REQUIRE(std::find(n.begin(), n.end(), w) == n.end());
      }
      REQUIRE(t.n_le_2.size() == n.size() + t.n2.size());
    }
    // induced subgraph keeps adjacency pairwise
    VertexSubset s;
    for (std::uint32_t l = 0; l < g.left_count(); ++l)
      if (rng() & 1) s.left.push_back(l);
    for (std::uint32_t r = 0; r < g.right_count(); ++r)
      if (rng() & 1) s.right.push_back(r);
    const auto sub = induced_subgraph(g, s);
    for (std::uint32_t i = 0; i < s.left.size(); ++i)
      for (std::uint32_t j = 0; j < s.right.size(); ++j)
        REQUIRE(sub.graph.has_edge(i, j) == g.has_edge(s.left[i], s.right[j]));
  }
}
