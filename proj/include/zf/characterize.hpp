#pragma once

#include <optional>

#include "zf/search.hpp"

// Structural recognizers and theorem verifiers: extreme propagation times,
// the zigzag characterization of pt = n-2, pt = 1 theory around matching
// graphs, trail construction, and the tree diameter bound.

namespace zf {

struct TrivialExtremes {
  bool pt_is_nminus1 = false;
  bool pt_max_is_nminus1 = false;
  bool z_is_1 = false;
  bool is_path = false;
  bool pt_is_0 = false;  // edgeless
};

// pt = n-1, PT = n-1, Z = 1 and "G is a path" are computed independently;
// a disagreement among the four throws.
TrivialExtremes classify_trivial_extremes(const Graph& g,
                                          const SearchBudget& budget = {});

struct ZigzagDecomposition {
  std::vector<int> p1, p2;  // parallel paths in path order (partition of V)
  std::vector<int> q;       // alternating path z_1..z_ell
  int ell() const { return (int)q.size(); }
};

// Follows the deterministic construction from the Z = 2 proof: pick a
// minimum zero forcing set whose schedule performs exactly one force per
// round, take the two maximal forcing chains as the parallel paths, and
// grow Q by z_{j+1} = max N(z_j) in the other path. Returns nullopt when
// Z != 2 or no single-force schedule exists.
std::optional<ZigzagDecomposition> zigzag_decompose(const Graph& g,
                                                    const SearchBudget& budget = {});

// True when the decomposition satisfies the zigzag conditions (paths,
// alternation, ordering, and the edge constraint). Throws on malformed input.
bool is_valid_zigzag(const Graph& g, const ZigzagDecomposition& d);

struct PtNminus2Verdict {
  bool verdict = false;          // pt(G) == n-2
  std::string reason;
  // Structural conditions (b)-(e) on the zigzag decomposition; meaningful
  // only when a decomposition exists.
  bool has_decomposition = false;
  bool structural_be_pass = false;
  // Exceptional-family substitute for condition (a): every minimum zero
  // forcing set propagates in exactly n-2 rounds.
  bool all_min_zfs_slow = false;
  bool brute_verdict = false;    // pt(G) == n-2 by direct computation
};

PtNminus2Verdict decide_pt_nminus2(const Graph& g, const SearchBudget& budget = {});

// Trees with PT = n-2 are exactly S(1,1,n-3); structural test only.
bool decide_pt_max_nminus2_tree(const Graph& t);

struct Pt1MatchingReport {
  bool halves_z = false;       // |G| == 2 Z(G)
  bool pt_is_1 = false;
  bool is_matching_graph = false;
  std::optional<MatchingSpec> witness;  // from an efficient set when (1)&(2)
  std::optional<std::vector<int>> matching_bipartition;  // V1 side, when found
};

Pt1MatchingReport pt1_matching_analysis(const Graph& g,
                                        const SearchBudget& budget = {});

// pt((H, K_n, mu)) = 1 iff H is connected; returns connectivity of H.
bool decide_matching_kn(const Graph& h, const MatchingSpec& mu);

struct ComponentNecessityResult {
  int c_h1 = 0, c_h2 = 0, c_g = 0;
  bool counts_equal = false;
  bool pt_is_1 = false;
  bool implication_holds = false;  // pt = 1 implies counts equal
  // When the counts differ, the proof's explicit forcing set of size n-1,
  // verified to force the matching graph.
  std::optional<VertexSet> small_forcing_set;
};

ComponentNecessityResult component_necessity_check(const Graph& h1,
                                                   const Graph& h2,
                                                   const MatchingSpec& mu,
                                                   const SearchBudget& budget = {});

struct Pt1VertexReport {
  int vertex = 0;
  int degree = 0;
  bool in_eff_intersection = false;
  bool always_two_forced_neighbors = false;  // |B^(1) cap N(v)| >= 2 for all eff B
};

// Requires pt(G) = 1. Evaluates both sides of the membership criterion per
// vertex and asserts the degree corollaries.
std::vector<Pt1VertexReport> pt1_vertex_tests(const Graph& g,
                                              const SearchBudget& budget = {});

struct PrimeSubgraph {
  Graph graph;                  // G' = G - S
  VertexSet b_prime = 0;        // B' in G' labels
  std::vector<int> old_of_new;  // G' vertex -> G vertex
};

// S = non-forcing members of B; asserts the structural facts about G'
// (matching graph, |G'| = 2|B'|, efficiency of both sides, pt = 1).
PrimeSubgraph prime_subgraph(const Graph& g, VertexSet b, const ForceSet& f,
                             const SearchBudget& budget = {});

// Trail with at least one forcing edge per round; len >= pt(G,B).
std::vector<int> build_trail(const Graph& g, VertexSet b, const ForceSet& f);

struct CombReport {
  int k = 0;
  int n = 0;
  int diam = 0;
  bool exact = false;  // exact Z search was in budget
  int z = 0;           // exact when exact, else |prescribed B|
  int pt = 0;          // exact when exact, else pt(G, prescribed B)
  VertexSet prescribed = 0;  // leaves numbered 2,3 mod 4 in path order
  bool prescribed_forces = false;
  int prescribed_pt = 0;
  int leaf_lower_bound = 0;  // ceil(#leaves / 2)
};

CombReport comb_analysis(int k, const SearchBudget& budget = {});

}  // namespace zf
