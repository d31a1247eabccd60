#include "doctest.h"
#include "helpers.hpp"
#include "mbb/complement.hpp"
#include "mbb/oracle.hpp"

using namespace mbb;
using Sizes = std::vector<std::pair<std::size_t, std::size_t>>;

TEST_CASE("component_maximal_instances examples") {
  CHECK(component_maximal_instances(make_path_component(3, Side::Left)).sizes() == Sizes{{0, 2}, {1, 1}, {2, 0}});
  CHECK(component_maximal_instances(make_cycle_component(4)).sizes() == Sizes{{0, 2}, {2, 0}});
  // p=4 starting on the right: 2 left, 3 right
  const auto even = make_path_component(4, Side::Right);
  REQUIRE(even.count(Side::Left) == 2);
  CHECK(component_maximal_instances(even).sizes() == Sizes{{0, 3}, {1, 1}, {2, 0}});
  CHECK(component_maximal_instances(make_path_component(1, Side::Left)).sizes() == Sizes{{0, 1}, {1, 0}});
}

TEST_CASE("instance tables equal enumeration") {
  for (std::size_t p = 1; p <= 14; ++p) {
    for (Side first : {Side::Left, Side::Right}) {
      const auto c = make_path_component(p, first);
      CAPTURE(p);
      REQUIRE(component_maximal_instances(c).sizes() == brute_force_component_instances(c).sizes());
    }
  }
  for (std::size_t p = 4; p <= 14; p += 2) {
    const auto c = make_cycle_component(p);
    CAPTURE(p);
    REQUIRE(component_maximal_instances(c).sizes() == brute_force_component_instances(c).sizes());
  }
}

TEST_CASE("instance witnesses are independent in the component") {
  for (std::size_t p = 1; p <= 12; ++p) {
    const auto c = p >= 4 && p % 2 == 0 ? make_cycle_component(p) : make_path_component(p, Side::Left);
    const auto t = component_maximal_instances(c);
    for (std::size_t i = 0; i < t.pairs.size(); ++i) {
      const auto& inst = t.pairs[i];
      std::size_t a = 0, b = 0;
      for (auto v : inst.witness) (v.side == Side::Left ? a : b)++;
      CHECK(a == inst.a);
      CHECK(b == inst.b);
      for (std::size_t k = 0; k < c.vertices.size(); ++k) {
        const auto& x = c.vertices[k];
        const auto& y = c.vertices[(k + 1) % c.vertices.size()];
        if (k + 1 == c.vertices.size() && c.kind != ComponentKind::Cycle) break;
        const bool both = std::find(inst.witness.begin(), inst.witness.end(), x) != inst.witness.end() &&
                          std::find(inst.witness.begin(), inst.witness.end(), y) != inst.witness.end();
        CHECK_FALSE(both);
      }
      // Pareto: strictly increasing a, strictly decreasing b
      if (i > 0) {
        CHECK(t.pairs[i - 1].a < inst.a);
        CHECK(t.pairs[i - 1].b > inst.b);
      }
    }
    CHECK(t.pairs.front().a == 0);
    CHECK(t.pairs.front().b == c.count(Side::Right));
    CHECK(t.pairs.back().a == c.count(Side::Left));
    CHECK(t.pairs.back().b == 0);
  }
}

TEST_CASE("printed closed forms agree only for odd paths and the 4-cycle") {
  for (std::size_t p = 1; p <= 11; p += 2) {
    const auto c = make_path_component(p, Side::Left);
    CHECK(printed_instance_formula(c) == brute_force_component_instances(c).sizes());
  }
  CHECK(printed_instance_formula(make_cycle_component(4)) == brute_force_component_instances(make_cycle_component(4)).sizes());
  CHECK(printed_instance_formula(make_cycle_component(6)) != brute_force_component_instances(make_cycle_component(6)).sizes());
  const auto even = make_path_component(4, Side::Right);
  CHECK(printed_instance_formula(even) != brute_force_component_instances(even).sizes());
}
