#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>

#include "doctest.h"
#include "json.hpp"
#include "zf/search.hpp"

using namespace zf;

TEST_CASE("fixture values") {
  SearchBudget big{.max_n_exact_z = 16, .max_n_force_enum = 6};

  AnalysisReport c4 = analyze(cycle(4));
  CHECK(c4.z == 2);
  CHECK(c4.pt == 1);

  AnalysisReport p3 = analyze(path(3));
  CHECK(p3.z == 1);
  CHECK(p3.pt == 2);
  CHECK(p3.pt_max == 2);
  CHECK(p3.min_zfs == std::vector<VertexSet>{bit(0), bit(2)});

  AnalysisReport d = analyze(dart());
  CHECK(d.z == 2);
  CHECK(d.pt == 3);
  CHECK(d.pt_max == 3);

  // K4 plus a pendant on vertex 0.
  Graph k4l(5);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) k4l.add_edge(i, j);
  k4l.add_edge(0, 4);
  AnalysisReport kr = analyze(k4l);
  CHECK(kr.z == 3);
  CHECK(kr.pt == 2);

  AnalysisReport w = analyze(wheel5());
  CHECK(w.pt == 1);
  CHECK(w.eff_intersection == bit(*wheel5().find_label("a")));

  AnalysisReport pet = analyze(petersen(), big);
  CHECK(pet.z == 5);
  CHECK(pet.pt == 1);

  AnalysisReport c5p2 = analyze(cartesian_product(cycle(5), path(2)), big);
  CHECK(c5p2.z == 4);
  CHECK(c5p2.pt >= 2);

  AnalysisReport q3 = analyze(hypercube(3));
  CHECK(q3.z == 4);
  CHECK(q3.pt == 1);

  AnalysisReport k13p2 = analyze(cartesian_product(star(3), path(2)));
  CHECK(k13p2.z == 3);
  CHECK(k13p2.pt >= 2);
}

TEST_CASE("realized times and discrepancy") {
  // P5: Z = 1, the two end starts both take 4 rounds.
  AnalysisReport p5 = analyze(path(5));
  CHECK(p5.pt == 4);
  CHECK(p5.pd == 0);
  CHECK(p5.realized_times == std::vector<int>{4});

  AnalysisReport d = analyze(dart());
  CHECK(d.pd == d.pt_max - d.pt);
  CHECK(d.realized_times.front() == d.pt);
  CHECK(d.realized_times.back() == d.pt_max);
  CHECK(std::is_sorted(d.realized_times.begin(), d.realized_times.end()));
}

TEST_CASE("budget errors") {
  CHECK_THROWS_AS(zero_forcing_number(path(11)), BudgetError);
  CHECK_THROWS_AS(analyze(path(11)), BudgetError);
  SearchBudget loose{.max_n_exact_z = 12};
  CHECK(zero_forcing_number(path(11), loose).z == 1);
}

TEST_CASE("force set enumeration") {
  // K3 from a pair: either black vertex forces the third.
  auto e = enumerate_force_sets(complete(3), bit(0) | bit(1));
  CHECK(e.force_sets.size() == 2);
  CHECK_FALSE(e.partial);

  // P4 from one end: a single chronology.
  auto p = enumerate_force_sets(path(4), bit(0));
  REQUIRE(p.force_sets.size() == 1);
  CHECK(p.force_sets[0].forces == std::vector<Force>{{0, 1}, {1, 2}, {2, 3}});

  // C4 from an adjacent pair: both forces can also route through one side.
  auto c = enumerate_force_sets(cycle(4), bit(0) | bit(1));
  CHECK(c.force_sets.size() == 3);

  SearchBudget tiny;
  tiny.max_force_sets = 1;
  CHECK_THROWS_AS(enumerate_force_sets(cycle(4), bit(0) | bit(1), tiny),
                  BudgetError);
  auto part = enumerate_force_sets(cycle(4), bit(0) | bit(1), tiny, true);
  CHECK(part.partial);
  CHECK(part.force_sets.size() == 1);

  CHECK_THROWS_AS(enumerate_force_sets(path(7), bit(0)), BudgetError);
}

TEST_CASE("efficient sets and nonuniqueness") {
  AnalysisReport p3 = analyze(path(3));
  CHECK(p3.eff == std::vector<VertexSet>{bit(0), bit(2)});
  CHECK(p3.eff_intersection == 0);
  CHECK(verify_nonuniqueness(path(3)));
  for (const Graph& g : {cycle(5), complete(4), star(3), dart()})
    CHECK(verify_nonuniqueness(g));
}

TEST_CASE("json and csv emission") {
  Graph g = cycle(4);
  AnalysisReport r = analyze(g);
  auto j = nlohmann::json::parse(analysis_to_json(g, r));
  CHECK(j["graph6"] == encode_graph6(g));
  CHECK(j["Z"] == 2);
  CHECK(j["pt"] == 1);
  CHECK(j["n"] == 4);

  CHECK(analysis_csv_header() ==
        "graph6,n,m,Z,pt,PT,pd,realized_times,eff_count,eff_intersection");
  std::string row = analysis_csv_row(g, r);
  CHECK(row.substr(0, row.find(',')) == encode_graph6(g));
  // Deterministic: same report, same row.
  CHECK(row == analysis_csv_row(g, analyze(g)));
}
