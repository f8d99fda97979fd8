#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>

#include "doctest.h"
#include "zf/graph.hpp"

using namespace zf;

TEST_CASE("paths cycles completes stars") {
  CHECK(path(1).edge_count() == 0);
  CHECK(path(5).edge_count() == 4);
  CHECK(is_path_graph(path(7)));
  CHECK_FALSE(is_path_graph(cycle(7)));
  CHECK(cycle(5).edge_count() == 5);
  CHECK(complete(6).edge_count() == 15);
  CHECK(star(4).order() == 5);
  CHECK(star(4).degree(0) == 4);
  CHECK(is_tree(star(4)));
}

TEST_CASE("generalized star layout and labels") {
  Graph g = generalized_star(2, 5, 11);
  CHECK(g.order() == 19);
  CHECK(is_tree(g));
  int center = *g.find_label("v");
  CHECK(g.degree(center) == 3);
  for (int i = 1; i <= 3; ++i) {
    int u = *g.find_label("u" + std::to_string(i));
    int w = *g.find_label("w" + std::to_string(i));
    CHECK(g.degree(u) == 1);
    CHECK(g.has_edge(center, w));
  }
  // Arm lengths: distance from center to each leaf.
  BasicMetrics m = basic_metrics(g);
  CHECK(m.diameter == 5 + 11);  // two longest arms
  CHECK_THROWS(generalized_star(5, 2, 11));  // arms must be sorted

  // S(1,1,n-3) agrees with the dedicated constructor.
  CHECK(are_isomorphic(generalized_star(1, 1, 4), t_shaped_tree(7)));
}

TEST_CASE("comb") {
  Graph g = comb(4);
  CHECK(g.order() == 8);
  CHECK(is_tree(g));
  CHECK(basic_metrics(g).diameter == 5);
  int leaves = 0;
  for (int v = 0; v < g.order(); ++v) leaves += g.degree(v) == 1;
  CHECK(leaves == 4);  // the teeth; spine ends have degree 2
  CHECK(basic_metrics(comb(8)).diameter == 9);
}

TEST_CASE("wheel and dart fixtures") {
  Graph w = wheel5();
  CHECK(w.order() == 5);
  CHECK(w.edge_count() == 8);
  CHECK(w.degree(*w.find_label("a")) == 4);

  Graph d = dart();
  CHECK(d.order() == 5);
  CHECK(d.edge_count() == 6);
  BasicMetrics m = basic_metrics(d);
  CHECK(m.diameter == 2);
  std::vector<int> deg = m.degrees;
  std::sort(deg.begin(), deg.end());
  CHECK(deg == std::vector<int>{1, 2, 2, 3, 4});
}

TEST_CASE("hypercube and products") {
  CHECK(hypercube(1) == path(2));
  CHECK(are_isomorphic(hypercube(2), cycle(4)));
  Graph q3 = hypercube(3);
  CHECK(q3.order() == 8);
  CHECK(q3.edge_count() == 12);
  CHECK(are_isomorphic(q3, cartesian_product(cycle(4), path(2))));
  Graph prism = cartesian_product(complete(3), path(2));
  CHECK(prism.order() == 6);
  CHECK(prism.edge_count() == 9);
}

TEST_CASE("petersen") {
  Graph p = petersen();
  CHECK(p.order() == 10);
  CHECK(p.edge_count() == 15);
  for (int v = 0; v < 10; ++v) CHECK(p.degree(v) == 3);
  // Girth 5: adjacent vertices share no neighbor, non-adjacent share one.
  for (int u = 0; u < 10; ++u)
    for (int v = u + 1; v < 10; ++v)
      CHECK(popcount(p.neighbors(u) & p.neighbors(v)) ==
            (p.has_edge(u, v) ? 0 : 1));
  // Matches the classic outer-cycle / inner-pentagram construction.
  Graph classic(10);
  for (int i = 0; i < 5; ++i) {
    classic.add_edge(i, (i + 1) % 5);
    classic.add_edge(5 + i, 5 + (i + 2) % 5);
    classic.add_edge(i, 5 + i);
  }
  CHECK(are_isomorphic(p, classic));
}

TEST_CASE("matching graph basics") {
  MatchingSpec id = MatchingSpec::identity(4);
  Graph g = matching_graph(cycle(4), cycle(4), id);
  CHECK(g.order() == 8);
  CHECK(g.edge_count() == 12);
  CHECK(are_isomorphic(g, cartesian_product(cycle(4), path(2))));
  CHECK_THROWS(MatchingSpec{{0, 0, 1, 2}}.validate(4));  // not a bijection
}

TEST_CASE("path plus isolated vertex") {
  Graph g = path_plus_isolated(6);
  CHECK(g.order() == 6);
  CHECK(component_count(g) == 2);
  CHECK(g.edge_count() == 4);
}

TEST_CASE("deletion keeps the right edges") {
  DeletionResult r = delete_vertex(dart(), 0);
  CHECK(r.graph.order() == 4);
  CHECK(component_count(r.graph) == 2);  // pendant 4 is cut off
  for (auto [u, v] : r.graph.edges())
    CHECK(dart().has_edge(r.old_of_new[u], r.old_of_new[v]));
}

TEST_CASE("isomorphism search") {
  CHECK(are_isomorphic(cycle(6), cartesian_product(path(3), path(2))) == false);
  CHECK(are_isomorphic(cycle(4), cartesian_product(path(2), path(2))));
  CHECK_FALSE(are_isomorphic(path(4), star(3)));
  auto map = find_isomorphism(petersen(), petersen());
  REQUIRE(map.has_value());
  for (auto [u, v] : petersen().edges())
    CHECK(petersen().has_edge((*map)[u], (*map)[v]));
  CHECK_THROWS_AS(are_isomorphic(path(13), path(13)), BudgetError);
}
