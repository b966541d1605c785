#include "doctest.h"
#include "paint/graph.hpp"

#include <set>
#include <stdexcept>

using namespace paint;

TEST_CASE("vertex set helpers") {
  CHECK(vs_size(0) == 0);
  CHECK(vs_size(vbit(0) | vbit(5)) == 2);
  CHECK(vs_lowest(vbit(3) | vbit(7)) == 3);
  CHECK(vs_to_string(0) == "-");
  CHECK(vs_to_string(vbit(2) | vbit(0) | vbit(9)) == "0 2 9");
  CHECK(vs_from_vector({4, 1}) == (vbit(1) | vbit(4)));
  CHECK(vs_to_vector(vbit(1) | vbit(4)) == std::vector<int>{1, 4});
  CHECK_THROWS_AS(vs_from_vector({30}), std::invalid_argument);
}

TEST_CASE("graph basics") {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(1, 0);  // duplicate collapses
  CHECK(g.order() == 4);
  CHECK(g.edge_count() == 2);
  CHECK(g.has_edge(2, 1));
  CHECK(!g.has_edge(0, 2));
  CHECK(g.degree(1) == 2);
  CHECK(g.neighbors(1) == (vbit(0) | vbit(2)));
  CHECK(g.vertices() == (vbit(4) - 1));
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
  CHECK_THROWS_AS(g.add_edge(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 4), std::invalid_argument);
  CHECK_THROWS_AS(Graph(0), std::invalid_argument);
  CHECK_THROWS_AS(Graph(31), std::invalid_argument);
}

TEST_CASE("structural predicates") {
  CHECK(is_connected(make_path(1)));
  CHECK(is_tree(make_path(5)));
  CHECK(is_path_graph(make_path(1)));
  CHECK(is_path_graph(make_path(6)));
  CHECK(!is_path_graph(make_cycle(4)));
  CHECK(is_cycle_graph(make_cycle(3)));
  CHECK(is_odd_cycle(make_cycle(7)));
  CHECK(!is_odd_cycle(make_cycle(8)));
  CHECK(!is_cycle_graph(make_path(3)));
  CHECK(contains_triangle(make_cycle(3)));
  CHECK(!contains_triangle(make_cycle(5)));
  CHECK(contains_triangle(make_dumbbell(3, 2, 4)));

  Graph two(2);  // disconnected pair
  CHECK(!is_connected(two));
  CHECK(!is_tree(two));
}

TEST_CASE("bipartition") {
  auto bp = bipartition(make_path(4));
  REQUIRE(bp.has_value());
  CHECK(bp->left == (vbit(0) | vbit(2)));
  CHECK(bp->right == (vbit(1) | vbit(3)));
  CHECK(!bipartition(make_cycle(5)).has_value());
  CHECK(is_bipartite(make_cycle(6)));
  CHECK(!is_bipartite(make_tadpole(2, 3)));

  // each component's lowest vertex lands on the left
  Graph g = disjoint_union(make_path(2), make_path(2));
  auto dp = bipartition(g);
  REQUIRE(dp.has_value());
  CHECK(dp->left == (vbit(0) | vbit(2)));
}

TEST_CASE("complete bipartite detection") {
  int hubs[2] = {-1, -1};
  auto n = is_complete_bipartite_2n(make_K2n(4), hubs);
  REQUIRE(n.has_value());
  CHECK(*n == 4);
  CHECK(hubs[0] == 0);
  CHECK(hubs[1] == 1);
  CHECK(is_complete_bipartite_2n(make_cycle(4)).has_value());  // C_4 = K_{2,2}
  CHECK(is_complete_bipartite_2n(make_path(3)).has_value());   // P_3 = K_{2,1}
  CHECK(!is_complete_bipartite_2n(make_cycle(6)).has_value());
  CHECK(!is_complete_bipartite_2n(make_path(4)).has_value());
  CHECK(!is_complete_bipartite_2n(make_cycle(3)).has_value());

  // K_{2,3} with scrambled labels: hubs 2 and 4
  Graph g(5);
  for (int leaf : {0, 1, 3}) {
    g.add_edge(2, leaf);
    g.add_edge(4, leaf);
  }
  auto m = is_complete_bipartite_2n(g, hubs);
  REQUIRE(m.has_value());
  CHECK(*m == 3);
  CHECK(hubs[0] == 2);
  CHECK(hubs[1] == 4);
}

TEST_CASE("core peels pendant trees") {
  SUBCASE("trees collapse to a single vertex") {
    for (int n : {1, 2, 3, 6}) {
      auto res = core(make_path(n));
      CHECK(res.core_graph.order() == 1);
      CHECK(vs_size(res.core_vertices) == 1);
    }
  }
  SUBCASE("cycle with a tail keeps the cycle") {
    auto res = core(make_tadpole(3, 5));
    CHECK(res.core_vertices == (vbit(5) - 1));
    CHECK(is_cycle_graph(res.core_graph));
    CHECK(res.labels == std::vector<int>{0, 1, 2, 3, 4});
  }
  SUBCASE("core of K_{2,3} plus a pendant is K_{2,3}") {
    Graph g(6);
    for (int leaf : {2, 3, 4}) {
      g.add_edge(0, leaf);
      g.add_edge(1, leaf);
    }
    g.add_edge(4, 5);
    auto res = core(g);
    CHECK(res.core_graph.order() == 5);
    CHECK(is_complete_bipartite_2n(res.core_graph) == std::optional<int>(3));
  }
  SUBCASE("classifier wrappers") {
    CHECK(core_is_K2n(make_K2n(5)) == std::optional<int>(5));
    CHECK(!core_is_K2n(make_cycle(5)).has_value());
    CHECK(core_is_odd_cycle(make_tadpole(4, 7)) == std::optional<int>(7));
    CHECK(!core_is_odd_cycle(make_tadpole(4, 6)).has_value());
    CHECK(!core_is_odd_cycle(make_path(5)).has_value());
  }
}

TEST_CASE("induced subgraph and disjoint union") {
  Graph c5 = make_cycle(5);
  std::vector<int> labels;
  Graph h = induced_subgraph(c5, vbit(1) | vbit(2) | vbit(4), &labels);
  CHECK(h.order() == 3);
  CHECK(h.edge_count() == 1);  // only 1-2 survives
  CHECK(h.has_edge(0, 1));
  CHECK(labels == std::vector<int>{1, 2, 4});
  CHECK_THROWS_AS(induced_subgraph(c5, 0, nullptr), std::invalid_argument);

  Graph u = disjoint_union(make_cycle(3), make_path(2));
  CHECK(u.order() == 5);
  CHECK(u.edge_count() == 4);
  CHECK(u.has_edge(3, 4));
  CHECK(!is_connected(u));
}

TEST_CASE("family generators") {
  SUBCASE("path and cycle") {
    CHECK(make_path(4).edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});
    CHECK(make_cycle(3).edge_count() == 3);
    CHECK_THROWS_AS(make_cycle(2), std::invalid_argument);
  }
  SUBCASE("theta: two degree-3 hubs, branch lengths as edge counts") {
    Graph t = make_theta(2, 2, 3);
    CHECK(t.order() == 6);  // 2 + (1 + 1 + 2) internals
    CHECK(t.edge_count() == 7);
    CHECK(t.degree(0) == 3);
    CHECK(t.degree(1) == 3);
    Graph t1 = make_theta(1, 2, 2);  // direct edge plus two 2-edge branches
    CHECK(t1.order() == 4);
    CHECK(t1.has_edge(0, 1));
    CHECK_THROWS_AS(make_theta(2, 1, 3), std::invalid_argument);
    CHECK_THROWS_AS(make_theta(1, 1, 3), std::invalid_argument);
  }
  SUBCASE("K_{2,n}") {
    Graph k = make_K2n(3);
    CHECK(k.order() == 5);
    CHECK(k.edge_count() == 6);
    CHECK(k.degree(0) == 3);
    CHECK(k.degree(2) == 2);
    CHECK(is_bipartite(k));
  }
  SUBCASE("dumbbell: cycles joined by a k-vertex path") {
    Graph d = make_dumbbell(3, 2, 4);
    CHECK(d.order() == 7);
    CHECK(d.edge_count() == 8);
    CHECK(d.degree(0) == 3);  // junction of the triangle
    CHECK(d.degree(3) == 3);  // junction of the square
    Graph shared = make_dumbbell(4, 1, 4);  // k = 1: cycles share one vertex
    CHECK(shared.order() == 7);
    CHECK(shared.degree(0) == 4);
    CHECK_THROWS_AS(make_dumbbell(2, 1, 3), std::invalid_argument);
  }
  SUBCASE("tadpole: cycle with a tail off vertex n-1") {
    Graph t = make_tadpole(3, 5);
    CHECK(t.order() == 7);
    CHECK(t.edge_count() == 7);
    CHECK(t.degree(4) == 3);
    CHECK(t.degree(6) == 1);  // free end
    Graph bare = make_tadpole(1, 4);  // m = 1 is just the cycle
    CHECK(is_cycle_graph(bare));
    CHECK_THROWS_AS(make_tadpole(0, 4), std::invalid_argument);
    CHECK_THROWS_AS(make_tadpole(2, 2), std::invalid_argument);
  }
}

TEST_CASE("edge list parsing") {
  Graph g = from_edge_list("0 1\n1 2\n");
  CHECK(g.order() == 3);
  CHECK(g.edge_count() == 2);

  Graph h = from_edge_list("5\n0 1\n0 1\n");  // header plus duplicate edge
  CHECK(h.order() == 5);
  CHECK(h.edge_count() == 1);

  Graph iso = from_edge_list("4\n");  // header alone: edgeless graph
  CHECK(iso.order() == 4);
  CHECK(iso.edge_count() == 0);

  CHECK_THROWS_AS(from_edge_list(""), std::invalid_argument);
  CHECK_THROWS_AS(from_edge_list("0 0\n"), std::invalid_argument);
  CHECK_THROWS_AS(from_edge_list("0 30\n"), std::invalid_argument);
  CHECK_THROWS_AS(from_edge_list("0 1\n5\n"), std::invalid_argument);  // header not first
  CHECK_THROWS_AS(from_edge_list("0 1 2\n"), std::invalid_argument);
  CHECK_THROWS_AS(from_edge_list("a b\n"), std::invalid_argument);
  CHECK_THROWS_AS(from_edge_list("3\n0 4\n"), std::invalid_argument);  // beyond header
}

TEST_CASE("graph6 codec") {
  // hand-decoded fixtures
  Graph k1 = from_graph6("@");
  CHECK(k1.order() == 1);
  CHECK(k1.edge_count() == 0);

  Graph c3 = from_graph6("Bw");
  CHECK(c3.order() == 3);
  CHECK(is_cycle_graph(c3));

  Graph star = from_graph6("D?{");  // 5 vertices, center 4 joined to 0..3
  CHECK(star.order() == 5);
  CHECK(star.degree(4) == 4);
  CHECK(star.edge_count() == 4);

  CHECK(to_graph6(k1) == "@");
  CHECK(to_graph6(c3) == "Bw");
  CHECK(to_graph6(star) == "D?{");

  // tolerated prefix and trailing newline
  CHECK(from_graph6(">>graph6<<Bw\n") == c3);

  // round trips across the generator families
  for (const Graph& g : {make_path(7), make_cycle(9), make_K2n(5), make_theta(2, 3, 4),
                         make_dumbbell(4, 1, 4), make_tadpole(3, 6)}) {
    CHECK(from_graph6(to_graph6(g)) == g);
  }

  CHECK_THROWS_AS(from_graph6(""), std::invalid_argument);
  CHECK_THROWS_AS(from_graph6("Bw junk"), std::invalid_argument);
  CHECK_THROWS_AS(from_graph6("B"), std::invalid_argument);       // truncated
  CHECK_THROWS_AS(from_graph6("~??"), std::invalid_argument);     // long form: too big
  CHECK_THROWS_AS(from_graph6(std::string(1, char(62))), std::invalid_argument);
}
