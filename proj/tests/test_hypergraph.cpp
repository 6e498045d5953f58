#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <sstream>

#include "hypermorph/hypergraph.hpp"
#include "support/random_hypergraph.hpp"

using namespace hypermorph;

namespace {

// Example hypergraph with five vertices v1..v5 stored as ids 0..4. Only
// M2 = {v2, v3} and M4 = {v3, v5} are pinned; M1 and M3 are arbitrary.
Hypergraph example_figure() {
  return Hypergraph(5, {{0}, {1, 2}, {0, 3}, {2, 4}});
}

Hypergraph two_path() { return Hypergraph(4, {{0, 1}, {1, 2}}); }

}  // namespace

TEST_CASE("build keeps edge order and memberships") {
  Hypergraph h = example_figure();
  CHECK(h.vertex_count() == 5);
  CHECK(h.edge_count() == 4);
  CHECK(h.edge_vertices(EdgeId{1}) == VertexSet(5, {1, 2}));
  CHECK(h.edge_vertices(EdgeId{3}) == VertexSet(5, {2, 4}));
  CHECK(h.rank(EdgeId{3}) == 2);
}

TEST_CASE("build with no edges gives isolated vertices") {
  Hypergraph h(1, {});
  CHECK(h.edge_count() == 0);
  CHECK(h.is_isolated(VertexId{0}));
}

TEST_CASE("build rejects empty and out-of-range edges") {
  using Edges = std::vector<std::vector<std::size_t>>;
  CHECK_THROWS_AS(Hypergraph(2, Edges{{0, 1}, {}}), HypergraphError);
  CHECK_THROWS_WITH_AS(Hypergraph(2, Edges{{0, 1}, {}}), doctest::Contains("edge 1"),
                       HypergraphError);
  CHECK_THROWS_WITH_AS(Hypergraph(3, Edges{{0, 3}}), doctest::Contains("edge 0"),
                       HypergraphError);
}

TEST_CASE("duplicate hyperedges are kept and repeated members collapse") {
  Hypergraph h(3, {{0, 1}, {1, 0}, {2, 2}});
  CHECK(h.edge_count() == 3);
  CHECK(h.rank(EdgeId{2}) == 1);
  CHECK(h.incident_edges(VertexId{1}) == EdgeSet(3, {0, 1}));
}

TEST_CASE("edge_vertices") {
  CHECK(Hypergraph(2, {{0, 1}}).edge_vertices(EdgeId{0}) == VertexSet(2, {0, 1}));
  CHECK_THROWS_AS(two_path().edge_vertices(EdgeId{2}), std::out_of_range);

  std::vector<std::vector<std::size_t>> input{{3, 1}, {0}, {4, 2, 0}};
  Hypergraph h(5, input);
  for (std::size_t e = 0; e < input.size(); ++e) {
    VertexSet expected(5);
    for (auto v : input[e]) expected.insert(v);
    CHECK(h.edge_vertices(EdgeId{e}) == expected);
  }
}

TEST_CASE("incident_edges and is_isolated") {
  Hypergraph h = two_path();
  CHECK(h.incident_edges(VertexId{1}) == EdgeSet(2, {0, 1}));
  CHECK(h.incident_edges(VertexId{3}).empty());
  CHECK(h.is_isolated(VertexId{3}));
  CHECK_FALSE(h.is_isolated(VertexId{0}));
  CHECK_THROWS_AS(h.incident_edges(VertexId{4}), std::out_of_range);
  CHECK_THROWS_AS(h.is_isolated(VertexId{9}), std::out_of_range);

  Hypergraph single(3, {{0, 1}});
  CHECK(single.is_isolated(VertexId{2}));
  CHECK_FALSE(single.is_isolated(VertexId{0}));
  CHECK(Hypergraph(4, {}).isolated_vertices() == VertexSet::full(4));
}

TEST_CASE("incidence is the transpose of edge membership") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    Hypergraph h = testing::random_hypergraph(rng);
    for (std::size_t x = 0; x < h.vertex_count(); ++x) {
      for (std::size_t e = 0; e < h.edge_count(); ++e) {
        CHECK(h.edge_vertices(EdgeId{e}).contains(x) ==
              h.incident_edges(VertexId{x}).contains(e));
      }
    }
  }
}

TEST_CASE("dual") {
  SUBCASE("single edge over two vertices") {
    Hypergraph d = dual(Hypergraph(2, {{0, 1}}));
    CHECK(d.vertex_count() == 1);
    CHECK(d.edge_lists() == std::vector<std::vector<std::size_t>>{{0}, {0}});
  }
  SUBCASE("two singleton edges") {
    Hypergraph h(2, {{0}, {1}});
    Hypergraph d = dual(h);
    CHECK(d.edge_lists() == std::vector<std::vector<std::size_t>>{{0}, {1}});
    CHECK(dual(d) == h);
  }
  SUBCASE("isolated vertex rejected") {
    CHECK_THROWS_WITH_AS(dual(two_path()), doctest::Contains("vertex 3"), HypergraphError);
  }
  SUBCASE("double dual is the identity") {
    std::mt19937 rng(11);
    testing::RandomHypergraphLimits lim;
    lim.allow_isolated = false;
    for (int trial = 0; trial < 200; ++trial) {
      Hypergraph h = testing::random_hypergraph(rng, lim);
      CHECK(dual(dual(h)) == h);
    }
  }
}

TEST_CASE("induced_subhypergraph") {
  Hypergraph h = two_path();
  SUBCASE("drops vertices and trims edges") {
    auto r = induced_subhypergraph(h, VertexSet(4, {0, 1}));
    CHECK(r.graph.vertex_count() == 2);
    CHECK(r.graph.edge_lists() == std::vector<std::vector<std::size_t>>{{0, 1}, {1}});
    CHECK(r.edge_map[0] == 0);
    CHECK(r.edge_map[1] == 1);
    CHECK_FALSE(r.vertex_map[3].has_value());
  }
  SUBCASE("edges missing A entirely disappear") {
    auto r = induced_subhypergraph(h, VertexSet(4, {0, 3}));
    CHECK(r.graph.edge_lists() == std::vector<std::vector<std::size_t>>{{0}});
    CHECK_FALSE(r.edge_map[1].has_value());
  }
  SUBCASE("whole vertex set is the identity") {
    auto r = induced_subhypergraph(h, h.all_vertices());
    CHECK(r.graph == h);
  }
  SUBCASE("empty subset") {
    auto r = induced_subhypergraph(h, h.no_vertices());
    CHECK(r.graph.vertex_count() == 0);
    CHECK(r.graph.edge_count() == 0);
  }
  CHECK_THROWS_AS(induced_subhypergraph(h, VertexSet(3)), std::out_of_range);
}

TEST_CASE("partial_hypergraph") {
  Hypergraph h = two_path();
  auto r = partial_hypergraph(h, EdgeSet(2, {0}));
  CHECK(r.graph.vertex_count() == 4);
  CHECK(r.graph.edge_lists() == std::vector<std::vector<std::size_t>>{{0, 1}});
  CHECK_FALSE(r.edge_map[1].has_value());

  CHECK(partial_hypergraph(h, h.all_edges()).graph == h);
  auto none = partial_hypergraph(h, h.no_edges());
  CHECK(none.graph.edge_count() == 0);
  CHECK(none.graph.vertex_count() == 4);
}

TEST_CASE("restrictions never touch the input") {
  Hypergraph h = example_figure();
  const Hypergraph copy = h;
  (void)induced_subhypergraph(h, VertexSet(5, {1, 2}));
  (void)partial_hypergraph(h, EdgeSet(4, {3}));
  (void)dual(Hypergraph(2, {{0}, {1}}));
  CHECK(h == copy);
}

TEST_CASE("rank and uniformity") {
  CHECK(example_figure().rank(EdgeId{3}) == 2);
  Hypergraph graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK(graph.is_k_uniform(2));
  CHECK_FALSE(graph.is_k_uniform(3));
  Hypergraph mixed(3, {{0, 1}, {0, 1, 2}});
  for (std::size_t k = 1; k <= 4; ++k) CHECK_FALSE(mixed.is_k_uniform(k));
  CHECK_THROWS_AS(graph.is_k_uniform(0), std::out_of_range);
  CHECK_THROWS_AS(graph.rank(EdgeId{4}), std::out_of_range);
}

TEST_CASE("fixture format") {
  std::istringstream in(
      "# example\n"
      "vertices 5\n"
      "edge 0: 0\n"
      "edge 1: 1 2\n"
      "\n"
      "edge 2: 0 3   # trailing comment\n"
      "edge 3: 2 4\n");
  Hypergraph h = parse_hypergraph_fixture(in);
  CHECK(h == example_figure());

  std::ostringstream out;
  write_hypergraph_fixture(out, h);
  std::istringstream again(out.str());
  CHECK(parse_hypergraph_fixture(again) == h);

  auto parse = [](const std::string& text) {
    std::istringstream s(text);
    return parse_hypergraph_fixture(s);
  };
  CHECK_THROWS_AS(parse("edge 0: 1\n"), HypergraphError);
  CHECK_THROWS_AS(parse("vertices 3\nedge 1: 0\n"), HypergraphError);
  CHECK_THROWS_AS(parse("vertices 3\nedge 0 1 2\n"), HypergraphError);
  CHECK_THROWS_AS(parse("vertices 3\nedge 0: 5\n"), HypergraphError);
  CHECK_THROWS_AS(parse("vertices 3\nedge 0:\n"), HypergraphError);
  CHECK_THROWS_AS(parse("vertices -2\n"), HypergraphError);
  CHECK(parse("vertices 2\n").edge_count() == 0);
}
