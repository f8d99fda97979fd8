#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>

#include "doctest.h"
#include "zf/forcing.hpp"

using namespace zf;

TEST_CASE("propagation on paths") {
  Graph p3 = path(3);
  PropagationTrace t = propagate(p3, bit(0));
  REQUIRE(t.complete);
  CHECK(t.propagation_time() == 2);
  CHECK(t.rounds == std::vector<VertexSet>{bit(0), bit(1), bit(2)});
  CHECK(t.colored_through(1) == (bit(0) | bit(1)));

  // A middle start stalls: both neighbors stay white.
  CHECK_FALSE(propagate(p3, bit(1)).complete);
  CHECK(is_zero_forcing_set(p3, bit(0)));
  CHECK_FALSE(is_zero_forcing_set(p3, bit(1)));
}

TEST_CASE("propagation on C4 is one round from an adjacent pair") {
  Graph c4 = cycle(4);
  PropagationTrace t = propagate(c4, bit(0) | bit(1));
  REQUIRE(t.complete);
  CHECK(t.propagation_time() == 1);
  CHECK_FALSE(propagate(c4, bit(0)).complete);
}

TEST_CASE("record and replay") {
  Graph p4 = path(4);
  ForceSet f = record_forces(p4, bit(0));
  CHECK(f.base == bit(0));
  CHECK(f.forces == std::vector<Force>{{0, 1}, {1, 2}, {2, 3}});
  CHECK(f.source_of(2) == 1);
  CHECK(f.source_of(0) == -1);
  CHECK(force_propagation_time(p4, f).propagation_time() == 3);
  CHECK_THROWS(record_forces(p4, bit(1)));  // not a forcing set

  // Tie-break control: on K3 from {0,1} either black vertex may force 2.
  Graph k3 = complete(3);
  ForceSet lo = record_forces(k3, bit(0) | bit(1));
  CHECK(lo.forces == std::vector<Force>{{0, 2}});
  ForceSet hi = record_forces(k3, bit(0) | bit(1), [](const std::vector<int>& s) {
    return *std::max_element(s.begin(), s.end());
  });
  CHECK(hi.forces == std::vector<Force>{{1, 2}});
}

TEST_CASE("force sets can be slower than the free schedule") {
  // C4 from an adjacent pair propagates in one round, but routing both
  // forces through one side takes two.
  Graph g = cycle(4);
  VertexSet b = bit(0) | bit(1);
  CHECK(propagate(g, b).propagation_time() == 1);
  ForceSet fast{b, {{0, 3}, {1, 2}}};
  CHECK(force_propagation_time(g, fast).propagation_time() == 1);
  ForceSet slow{b, {{0, 3}, {3, 2}}};
  CHECK(force_propagation_time(g, slow).propagation_time() == 2);
}

TEST_CASE("validation rejects malformed force sets") {
  Graph p4 = path(4);
  // Wrong source: 3 cannot be forced by 1 (no edge).
  CHECK_THROWS(validate_force_set(p4, ForceSet{bit(0), {{0, 1}, {1, 2}, {1, 3}}}));
  // Missing force for a white vertex.
  CHECK_THROWS(validate_force_set(p4, ForceSet{bit(0), {{0, 1}, {1, 2}}}));
  // Unreplayable: 2 -> 3 can never fire while 1 is still white... but 1 is
  // never forced.
  CHECK_THROWS(validate_force_set(p4, ForceSet{bit(0) | bit(2), {{0, 1}, {1, 2}, {2, 3}}}));
  // Valid set passes.
  validate_force_set(p4, ForceSet{bit(0), {{0, 1}, {1, 2}, {2, 3}}});
}

TEST_CASE("terminus reverse and chains") {
  Graph p5 = path(5);
  ForceSet f = record_forces(p5, bit(0));
  CHECK(terminus(f) == bit(4));
  ForceSet r = reverse(f);
  CHECK(r.base == bit(4));
  CHECK(force_propagation_time(p5, r).propagation_time() == 4);
  CHECK(reverse(r) == f);

  // Two chains on a path forced from both ends plus nothing in between.
  Graph p4 = path(4);
  ForceSet g{bit(0) | bit(3), {{0, 1}, {3, 2}}};
  validate_force_set(p4, g);
  auto chains = forcing_chains(p4, g);
  REQUIRE(chains.size() == 2);
  CHECK(chains[0] == std::vector<int>{0, 1});
  CHECK(chains[1] == std::vector<int>{3, 2});
}

TEST_CASE("q sets satisfy the containment lemma") {
  Graph p4 = path(4);
  ForceSet f = record_forces(p4, bit(0));
  auto q = q_sets(p4, f);
  REQUIRE(q.size() == 4);  // Q_0 .. Q_pt
  CHECK(q[0] == bit(3));   // Term(F)
  CHECK(q[1] == bit(2));
  CHECK(q[2] == bit(1));
  CHECK(q[3] == bit(0));
  ForceTrace rev = force_propagation_time(p4, reverse(f));
  VertexSet cum = 0;
  for (std::size_t t = 0; t < q.size(); ++t) {
    cum |= rev.rounds[t];
    CHECK((q[t] & ~cum) == 0);
  }
}

TEST_CASE("force set json round trip") {
  ForceSet f{bit(0) | bit(3), {{0, 1}, {3, 2}}};
  ForceSet g = force_set_from_json(force_set_to_json(f));
  CHECK(f == g);
  CHECK_THROWS(force_set_from_json("not json"));
}
