#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "zf/characterize.hpp"
#include "zf/suites.hpp"

using namespace zf;

TEST_CASE("trivial extremes") {
  TrivialExtremes p = classify_trivial_extremes(path(5));
  CHECK(p.is_path);
  CHECK(p.z_is_1);
  CHECK(p.pt_is_nminus1);
  CHECK(p.pt_max_is_nminus1);
  CHECK_FALSE(p.pt_is_0);

  TrivialExtremes e = classify_trivial_extremes(parse_graph6("D??"));
  CHECK(e.pt_is_0);
  CHECK_FALSE(e.is_path);

  TrivialExtremes c = classify_trivial_extremes(cycle(5));
  CHECK_FALSE(c.is_path);
  CHECK_FALSE(c.z_is_1);
  CHECK_FALSE(c.pt_is_nminus1);
}

TEST_CASE("pt equals n-2 decisions") {
  // Disconnected case: P_{n-1} plus an isolated vertex.
  CHECK(decide_pt_nminus2(path_plus_isolated(5)).verdict);
  CHECK_FALSE(decide_pt_nminus2(parse_graph6("D??")).verdict);

  // Trees: exactly K_{1,3}.
  CHECK(decide_pt_nminus2(star(3)).verdict);
  CHECK_FALSE(decide_pt_nminus2(path(4)).verdict);
  CHECK_FALSE(decide_pt_nminus2(t_shaped_tree(5)).verdict);

  // Zigzag territory: the dart has pt = n-2 = 3.
  PtNminus2Verdict d = decide_pt_nminus2(dart());
  CHECK(d.verdict);
  CHECK(d.brute_verdict);
  CHECK(d.has_decomposition);

  PtNminus2Verdict c4 = decide_pt_nminus2(cycle(4));
  CHECK_FALSE(c4.verdict);
  CHECK_FALSE(c4.brute_verdict);

  // Verdict and brute force agree on every graph in the bundled corpus.
  for (const Graph& g :
       read_graph6_file(std::string(ZF_DATA_DIR) + "/all_n_le6.g6")) {
    if (g.order() < 2) continue;
    PtNminus2Verdict v = decide_pt_nminus2(g);
    CHECK(v.verdict == v.brute_verdict);
  }
}

TEST_CASE("zigzag decomposition") {
  CHECK_FALSE(zigzag_decompose(path(5)).has_value());  // Z = 1
  auto d = zigzag_decompose(dart());
  REQUIRE(d.has_value());
  CHECK(is_valid_zigzag(dart(), *d));
  CHECK(d->p1.size() + d->p2.size() == 5);

  auto s = zigzag_decompose(star(3));
  REQUIRE(s.has_value());
  CHECK(is_valid_zigzag(star(3), *s));
}

TEST_CASE("trees with maximum propagation time n-2") {
  CHECK(decide_pt_max_nminus2_tree(star(3)));
  CHECK(decide_pt_max_nminus2_tree(t_shaped_tree(6)));
  CHECK_FALSE(decide_pt_max_nminus2_tree(path(5)));
  CHECK_FALSE(decide_pt_max_nminus2_tree(comb(4)));
  CHECK_FALSE(decide_pt_max_nminus2_tree(star(4)));
}

TEST_CASE("pt = 1 matching analysis") {
  Pt1MatchingReport c4 = pt1_matching_analysis(cycle(4));
  CHECK(c4.halves_z);
  CHECK(c4.pt_is_1);
  CHECK(c4.is_matching_graph);
  REQUIRE(c4.witness.has_value());
  c4.witness->validate(2);

  // P4 is a matching graph (ends vs middle edge) but Z = 1 and pt = 3.
  Pt1MatchingReport p4 = pt1_matching_analysis(path(4));
  CHECK_FALSE(p4.halves_z);
  CHECK_FALSE(p4.pt_is_1);
  CHECK(p4.is_matching_graph);

  // The triangle: none of the three conditions (odd order).
  Pt1MatchingReport k3 = pt1_matching_analysis(complete(3));
  CHECK_FALSE(k3.halves_z);
  CHECK_FALSE(k3.is_matching_graph);

  // Petersen: all three hold.
  SearchBudget big{.max_n_exact_z = 12};
  Pt1MatchingReport pet = pt1_matching_analysis(petersen(), big);
  CHECK(pet.halves_z);
  CHECK(pet.pt_is_1);
  CHECK(pet.is_matching_graph);
}

TEST_CASE("matching with a complete graph") {
  CHECK(decide_matching_kn(cycle(5), MatchingSpec::petersen()));
  CHECK(decide_matching_kn(complete(3), MatchingSpec::identity(3)));
  Graph h(3);  // K2 plus an isolated vertex: disconnected
  h.add_edge(0, 1);
  CHECK_FALSE(decide_matching_kn(h, MatchingSpec::identity(3)));

  // The prediction matches direct computation.
  Graph g = matching_graph(h, complete(3), MatchingSpec::identity(3));
  CHECK(analyze(g).pt != 1);
  Graph g2 = matching_graph(complete(3), complete(3), MatchingSpec::identity(3));
  CHECK(analyze(g2).pt == 1);
}

TEST_CASE("component count necessity") {
  Graph empty2(2);
  auto r = component_necessity_check(empty2, complete(2),
                                     MatchingSpec::identity(2));
  CHECK(r.c_h1 == 2);
  CHECK(r.c_h2 == 1);
  CHECK_FALSE(r.counts_equal);
  CHECK_FALSE(r.pt_is_1);
  CHECK(r.implication_holds);
  REQUIRE(r.small_forcing_set.has_value());
  CHECK(popcount(*r.small_forcing_set) == 1);

  auto eq = component_necessity_check(cycle(5), cycle(5),
                                      MatchingSpec::petersen(),
                                      SearchBudget{.max_n_exact_z = 12});
  CHECK(eq.counts_equal);
  CHECK(eq.pt_is_1);
  CHECK(eq.implication_holds);
}

TEST_CASE("pt = 1 vertex membership tests") {
  auto reports = pt1_vertex_tests(wheel5());
  int hub = *wheel5().find_label("a");
  for (const auto& r : reports) {
    CHECK(r.in_eff_intersection == r.always_two_forced_neighbors);
    if (r.vertex == hub) CHECK(r.in_eff_intersection);
  }
  CHECK_THROWS(pt1_vertex_tests(path(3)));  // pt != 1
}

TEST_CASE("prime subgraph extraction") {
  // Wheel on five vertices: |B| = 3 > n - |B|, so some base vertex never
  // forces and a proper prime subgraph exists.
  Graph g = wheel5();
  AnalysisReport rep = analyze(g);
  REQUIRE(rep.pt == 1);
  VertexSet b = rep.eff.front();
  ForceSet f = record_forces(g, b);
  PrimeSubgraph ps = prime_subgraph(g, b, f);
  CHECK(ps.graph.order() % 2 == 0);
  CHECK(ps.graph.order() == 2 * popcount(ps.b_prime));
  CHECK(ps.graph.order() < g.order());
}

TEST_CASE("trail construction") {
  for (const Graph& g : {path(5), star(3), dart(), cycle(6)}) {
    AnalysisReport rep = analyze(g);
    for (VertexSet b : rep.min_zfs) {
      ForceSet f = record_forces(g, b);
      auto trail = build_trail(g, b, f);
      REQUIRE(!trail.empty());
      CHECK((int)trail.size() - 1 >= propagate(g, b).propagation_time());
      for (std::size_t i = 0; i + 1 < trail.size(); ++i)
        CHECK(g.has_edge(trail[i], trail[i + 1]));
    }
  }
}

TEST_CASE("comb analysis") {
  CombReport c4 = comb_analysis(4);
  CHECK(c4.n == 8);
  CHECK(c4.exact);
  CHECK(c4.z == 2);
  CHECK(c4.pt == 3);
  CHECK(c4.diam == 5);
  CHECK(c4.prescribed_forces);
  CHECK(c4.leaf_lower_bound == 2);

  // k = 8 is over the default Z budget: certified via the leaf bound.
  CombReport c8 = comb_analysis(8);
  CHECK(c8.n == 16);
  CHECK_FALSE(c8.exact);
  CHECK(c8.z == 4);
  CHECK(c8.pt == 3);
  CHECK(c8.diam == 9);
  CHECK(c8.leaf_lower_bound == 4);

  CombReport c8x = comb_analysis(8, SearchBudget{.max_n_exact_z = 16});
  CHECK(c8x.exact);
  CHECK(c8x.z == 4);
  CHECK(c8x.pt == 3);

  CHECK_THROWS(comb_analysis(6));  // spine length must be divisible by 4
}

TEST_CASE("generalized star table closed forms") {
  auto rows = genstar_table(2, 3, 4);
  REQUIRE(rows.size() == 9);
  std::vector<int> closed;
  for (const auto& r : rows) {
    CHECK(r.pt == r.closed_form);
    closed.push_back(r.closed_form);
  }
  CHECK(closed == std::vector<int>{6, 6, 7, 6, 6, 7, 5, 5, 6});
  CHECK_THROWS(genstar_table(1, 2, 3));  // needs 1 < e1
}
