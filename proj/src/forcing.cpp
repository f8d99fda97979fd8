#include "zf/forcing.hpp"

#include <algorithm>

#include "json.hpp"

namespace zf {

VertexSet PropagationTrace::colored_through(int t) const {
  VertexSet u = 0;
  for (int i = 0; i <= t && i < (int)rounds.size(); ++i) u |= rounds[i];
  return u;
}

PropagationTrace propagate(const Graph& g, VertexSet b) {
  if (b & ~g.all_vertices()) throw std::invalid_argument("B is not a subset of V");
  PropagationTrace tr;
  tr.rounds.push_back(b);
  VertexSet colored = b;
  for (;;) {
    VertexSet next = 0;
    for (int v : set_to_vector(colored)) {
      VertexSet white = g.neighbors(v) & ~colored;
      if (popcount(white) == 1) next |= white;
    }
    if (!next) break;
    tr.rounds.push_back(next);
    colored |= next;
  }
  tr.complete = colored == g.all_vertices();
  return tr;
}

bool is_zero_forcing_set(const Graph& g, VertexSet b) {
  return propagate(g, b).complete;
}

void ForceSet::normalize() { std::sort(forces.begin(), forces.end()); }

int ForceSet::source_of(int target) const {
  for (const Force& f : forces)
    if (f.target == target) return f.source;
  return -1;
}

std::string force_set_to_json(const ForceSet& f) {
  nlohmann::json j;
  j["base"] = set_to_vector(f.base);
  auto& fa = j["forces"] = nlohmann::json::array();
  for (const Force& fc : f.forces) fa.push_back({fc.source, fc.target});
  return j.dump();
}

ForceSet force_set_from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  ForceSet f;
  f.base = vector_to_set(j.at("base").get<std::vector<int>>());
  for (const auto& p : j.at("forces"))
    f.forces.push_back({p.at(0).get<int>(), p.at(1).get<int>()});
  f.normalize();
  return f;
}

ForceSet record_forces(const Graph& g, VertexSet b, const TieBreak& tie) {
  PropagationTrace tr = propagate(g, b);
  if (!tr.complete)
    throw std::invalid_argument("record_forces: B is not a zero forcing set");
  ForceSet out;
  out.base = b;
  VertexSet colored = b;
  for (std::size_t t = 1; t < tr.rounds.size(); ++t) {
    for (int w : set_to_vector(tr.rounds[t])) {
      std::vector<int> sources;
      for (int v : set_to_vector(colored))
        if ((g.neighbors(v) & ~colored) == bit(w)) sources.push_back(v);
      int chosen = tie ? tie(sources) : sources.front();
      out.forces.push_back({chosen, w});
    }
    colored |= tr.rounds[t];
  }
  out.normalize();
  return out;
}

namespace {

void check_structure(const Graph& g, const ForceSet& f) {
  VertexSet targets = 0, sources = 0;
  for (const Force& fc : f.forces) {
    if (fc.source < 0 || fc.source >= g.order() || fc.target < 0 ||
        fc.target >= g.order() || !g.has_edge(fc.source, fc.target))
      throw std::invalid_argument("force set: force is not along an edge");
    if (contains(sources, fc.source))
      throw std::invalid_argument("force set: vertex forces twice");
    if (contains(targets, fc.target))
      throw std::invalid_argument("force set: vertex forced twice");
    sources |= bit(fc.source);
    targets |= bit(fc.target);
  }
  if (targets != (g.all_vertices() & ~f.base))
    throw std::invalid_argument("force set: targets must be exactly V \\ B");
}

}  // namespace

void validate_force_set(const Graph& g, const ForceSet& f) {
  check_structure(g, f);
  // Greedy replay, one force at a time. A legal force stays legal until
  // fired, so greedy order is complete.
  VertexSet colored = f.base;
  std::vector<bool> done(f.forces.size(), false);
  std::size_t left = f.forces.size();
  bool progress = true;
  while (left > 0 && progress) {
    progress = false;
    for (std::size_t i = 0; i < f.forces.size(); ++i) {
      if (done[i]) continue;
      const Force& fc = f.forces[i];
      if (contains(colored, fc.source) &&
          (g.neighbors(fc.source) & ~colored) == bit(fc.target)) {
        colored |= bit(fc.target);
        done[i] = true;
        --left;
        progress = true;
      }
    }
  }
  if (left > 0) {
    for (std::size_t i = 0; i < f.forces.size(); ++i)
      if (!done[i])
        throw std::invalid_argument(
            "force set not replayable; stuck at force " +
            std::to_string(f.forces[i].source) + "->" +
            std::to_string(f.forces[i].target));
  }
}

ForceTrace force_propagation_time(const Graph& g, const ForceSet& f) {
  validate_force_set(g, f);
  ForceTrace tr;
  tr.rounds.push_back(f.base);
  VertexSet colored = f.base;
  while (colored != g.all_vertices()) {
    VertexSet next = 0;
    for (const Force& fc : f.forces) {
      if (contains(colored, fc.target) || !contains(colored, fc.source))
        continue;
      if ((g.neighbors(fc.source) & ~colored) == bit(fc.target))
        next |= bit(fc.target);
    }
    if (!next)
      throw std::logic_error("validated force set stalled during replay");
    tr.rounds.push_back(next);
    colored |= next;
  }
  return tr;
}

VertexSet terminus(const ForceSet& f) {
  VertexSet sources = 0;
  for (const Force& fc : f.forces) sources |= bit(fc.source);
  VertexSet all = f.base;
  for (const Force& fc : f.forces) all |= bit(fc.target);
  return all & ~sources;
}

ForceSet reverse(const ForceSet& f) {
  ForceSet r;
  r.base = terminus(f);
  for (const Force& fc : f.forces) r.forces.push_back({fc.target, fc.source});
  r.normalize();
  return r;
}

std::vector<std::vector<int>> forcing_chains(const Graph& g, const ForceSet& f) {
  check_structure(g, f);
  std::vector<int> succ(g.order(), -1);
  for (const Force& fc : f.forces) succ[fc.source] = fc.target;
  std::vector<std::vector<int>> chains;
  for (int v : set_to_vector(f.base)) {
    std::vector<int> chain;
    for (int u = v; u != -1; u = succ[u]) chain.push_back(u);
    chains.push_back(std::move(chain));
  }
  return chains;
}

std::vector<VertexSet> q_sets(const Graph& g, const ForceSet& f) {
  ForceTrace tr = force_propagation_time(g, f);
  int pt = tr.propagation_time();
  std::vector<VertexSet> q(pt + 1, 0);
  q[0] = terminus(f);
  for (int t = 1; t <= pt; ++t)
    for (int w : set_to_vector(tr.rounds[pt - t + 1])) q[t] |= bit(f.source_of(w));
  return q;
}

}  // namespace zf
