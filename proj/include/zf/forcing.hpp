#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "zf/graph.hpp"

// The color-change engine: synchronous propagation rounds, force-set
// recording and replay, chains, terminus, reversal, and the Q_t sets.

namespace zf {

struct Force {
  int source;
  int target;
  friend bool operator==(const Force& a, const Force& b) {
    return a.source == b.source && a.target == b.target;
  }
  friend bool operator<(const Force& a, const Force& b) {
    return std::pair(a.source, a.target) < std::pair(b.source, b.target);
  }
};

struct PropagationTrace {
  std::vector<VertexSet> rounds;  // B^(0), B^(1), ..., last nonempty round
  bool complete = false;          // union of rounds == V
  // pt(G,B); only meaningful when complete.
  int propagation_time() const { return (int)rounds.size() - 1; }
  VertexSet colored_through(int t) const;
};

// Synchronous rounds under the color-change rule. Incompleteness is a
// normal result, not an error.
PropagationTrace propagate(const Graph& g, VertexSet b);

bool is_zero_forcing_set(const Graph& g, VertexSet b);

// An unordered set of forces realizing one forcing process for base B.
struct ForceSet {
  VertexSet base = 0;
  std::vector<Force> forces;  // kept sorted by (source, target)

  void normalize();
  int source_of(int target) const;  // -1 when target is in base
  friend bool operator==(const ForceSet& a, const ForceSet& b) {
    return a.base == b.base && a.forces == b.forces;
  }
  friend bool operator<(const ForceSet& a, const ForceSet& b) {
    return std::pair(a.base, a.forces) < std::pair(b.base, b.forces);
  }
};

std::string force_set_to_json(const ForceSet& f);
ForceSet force_set_from_json(const std::string& text);

// Picks the source when several vertices could force the same target in a
// round. Default: smallest source index.
using TieBreak = std::function<int(const std::vector<int>& sources)>;

// Records a force set in which every force fires at the earliest possible
// round (the propagating schedule), so pt(G,F) = pt(G,B). Throws when B is
// not a zero forcing set.
ForceSet record_forces(const Graph& g, VertexSet b, const TieBreak& tie = {});

struct ForceTrace {
  std::vector<VertexSet> rounds;  // F^(0), ..., F^(t0)
  int propagation_time() const { return (int)rounds.size() - 1; }
};

// Replays a force set with forcing restricted to the designated source of
// each target. Throws (naming the first unreplayable force) when F is not
// realizable by any legal chronology.
ForceTrace force_propagation_time(const Graph& g, const ForceSet& f);

// Throws when F is not replayable as a legal sequence of moves.
void validate_force_set(const Graph& g, const ForceSet& f);

VertexSet terminus(const ForceSet& f);
ForceSet reverse(const ForceSet& f);

// Maximal forcing chains; they partition V into induced paths, one chain
// per base vertex.
std::vector<std::vector<int>> forcing_chains(const Graph& g, const ForceSet& f);

// Q_0 = Term(F); Q_t = sources of the forces landing in F^(pt - t + 1).
std::vector<VertexSet> q_sets(const Graph& g, const ForceSet& f);

}  // namespace zf
