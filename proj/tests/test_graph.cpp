#include <doctest.h>

#include <stdexcept>

#include "gaplab/graph.hpp"

using namespace gaplab;

TEST_CASE("parse_graph accepts a triangle") {
  Graph g = parse_graph("3 3\n0 1\n1 2\n0 2\n");
  CHECK(g.n == 3);
  CHECK(g.edges.size() == 3);
  CHECK(g.deg == std::vector<int>{2, 2, 2});
}

TEST_CASE("parse_graph accepts a single edge and comments") {
  Graph g = parse_graph("# K2\n2 1\n0 1\n");
  CHECK(g.deg == std::vector<int>{1, 1});
}

TEST_CASE("parse_graph rejects malformed input") {
  CHECK_THROWS_AS(parse_graph("3 2\n0 1\n0 1\n"), std::invalid_argument);  // duplicate
  CHECK_THROWS_AS(parse_graph("3 1\n1 1\n"), std::invalid_argument);       // self-loop
  CHECK_THROWS_AS(parse_graph("3 1\n0 5\n"), std::invalid_argument);       // range
  CHECK_THROWS_AS(parse_graph("3 2\n0 1\n"), std::invalid_argument);       // m mismatch
  CHECK_THROWS_AS(parse_graph("3 1\n0\n1\n"), std::invalid_argument);      // malformed line
  CHECK_THROWS_AS(parse_graph(""), std::invalid_argument);
}

TEST_CASE("edge list round-trips through the text format") {
  Graph g = make_family("petersen", {});
  Graph h = parse_graph(to_edge_list(g));
  CHECK(h.edges == g.edges);
}

TEST_CASE("families carry construction metadata") {
  Graph c5 = make_family("cycle", {5});
  CHECK(c5.n == 5);
  CHECK(c5.edges.size() == 5);
  CHECK(c5.meta.regular_degree == 2);
  CHECK(c5.meta.vertex_transitive == VtProvenance::ByConstruction);
  CHECK(c5.meta.bipartite == false);

  Graph kb = make_family("complete_bipartite", {2, 3});
  CHECK(kb.meta.bipartite == true);
  CHECK(kb.n == 5);
  CHECK(kb.edges.size() == 6);

  Graph pet = make_family("petersen", {});
  CHECK(pet.n == 10);
  CHECK(pet.meta.regular_degree == 3);
  CHECK_FALSE(is_bipartite(pet));  // odd-cycle detection on the built graph

  Graph q3 = make_family("hypercube", {3});
  CHECK(q3.n == 8);
  CHECK(q3.edges.size() == 12);
  CHECK(is_bipartite(q3));
}

TEST_CASE("families reject bad parameters") {
  CHECK_THROWS_AS(make_family("cycle", {2}), std::invalid_argument);
  CHECK_THROWS_AS(make_family("moebius", {5}), std::invalid_argument);
  CHECK_THROWS_AS(make_family("petersen", {1}), std::invalid_argument);
}

TEST_CASE("degree sum equals twice the edge count for every family") {
  for (const auto& g :
       {make_family("cycle", {7}), make_family("complete", {6}),
        make_family("complete_bipartite", {3, 4}), make_family("hypercube", {4}),
        make_family("petersen", {})}) {
    CHECK(g.volume() == 2 * (long long)g.edges.size());
  }
}

TEST_CASE("bipartiteness test") {
  CHECK(is_bipartite(make_family("cycle", {4})));
  CHECK_FALSE(is_bipartite(make_family("cycle", {5})));
  auto coloring = bipartition(make_family("cycle", {6}));
  REQUIRE(coloring.has_value());
  Graph c6 = make_family("cycle", {6});
  for (auto [u, v] : c6.edges) CHECK((*coloring)[u] != (*coloring)[v]);
}

TEST_CASE("connectivity test") {
  CHECK(is_connected(make_family("cycle", {5})));
  CHECK(is_connected(make_family("complete", {4})));
  Graph two_edges = build_graph(4, {{0, 1}, {2, 3}});
  CHECK_FALSE(is_connected(two_edges));
}

TEST_CASE("vertex-transitivity search") {
  CHECK(verify_vertex_transitive(make_family("cycle", {6})) == VtVerdict::Verified);
  Graph path = build_graph(3, {{0, 1}, {1, 2}});
  CHECK(verify_vertex_transitive(path) == VtVerdict::Refuted);
  CHECK(verify_vertex_transitive(make_family("petersen", {})) == VtVerdict::Verified);

  Graph prism = build_graph(
      6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
  CHECK(verify_vertex_transitive(prism) == VtVerdict::Verified);

  // 3-regular but not vertex-transitive: two copies of K4 minus an edge,
  // bridged at the degree-2 vertices; triangle counts differ across vertices
  Graph dumbbell = build_graph(8, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                                   {4, 6}, {4, 7}, {5, 6}, {5, 7}, {6, 7},
                                   {0, 4}, {1, 5}});
  CHECK(verify_vertex_transitive(dumbbell) == VtVerdict::Refuted);
}

TEST_CASE("search limit produces skipped") {
  Graph g = make_family("cycle", {12});
  g.meta.vertex_transitive = VtProvenance::Unknown;
  CHECK(verify_vertex_transitive(g, 10) == VtVerdict::Skipped);
  // by-construction flag short-circuits past the limit
  Graph c12 = make_family("cycle", {12});
  CHECK(verify_vertex_transitive(c12, 10) == VtVerdict::Verified);
}
