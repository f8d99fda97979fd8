#include <algorithm>

#include "zf/graph.hpp"

namespace zf {

namespace {

// Invariant used to prune the map search: (degree, sorted neighbor degrees).
std::vector<std::pair<int, std::vector<int>>> vertex_invariants(const Graph& g) {
  std::vector<std::pair<int, std::vector<int>>> inv(g.order());
  for (int v = 0; v < g.order(); ++v) {
    std::vector<int> nd;
    for (int u : set_to_vector(g.neighbors(v))) nd.push_back(g.degree(u));
    std::sort(nd.begin(), nd.end());
    inv[v] = {g.degree(v), std::move(nd)};
  }
  return inv;
}

struct IsoSearch {
  const Graph& g;
  const Graph& h;
  std::vector<std::vector<int>> candidates;  // per g-vertex, invariant-equal h-vertices
  std::vector<int> map;                      // g vertex -> h vertex, -1 unset
  VertexSet used = 0;

  bool extend(int v) {
    if (v == g.order()) return true;
    for (int w : candidates[v]) {
      if (contains(used, w)) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u)
        if (g.has_edge(u, v) != h.has_edge(map[u], w)) ok = false;
      if (!ok) continue;
      map[v] = w;
      used |= bit(w);
      if (extend(v + 1)) return true;
      used &= ~bit(w);
      map[v] = -1;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h,
                                                 int max_n) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count())
    return std::nullopt;
  if (g.order() > max_n)
    throw BudgetError("isomorphism search limited to n <= " +
                      std::to_string(max_n));
  auto ig = vertex_invariants(g), ih = vertex_invariants(h);
  {
    auto sg = ig, sh = ih;
    std::sort(sg.begin(), sg.end());
    std::sort(sh.begin(), sh.end());
    if (sg != sh) return std::nullopt;
  }
  IsoSearch s{g, h, {}, std::vector<int>(g.order(), -1)};
  s.candidates.resize(g.order());
  for (int v = 0; v < g.order(); ++v)
    for (int w = 0; w < h.order(); ++w)
      if (ig[v] == ih[w]) s.candidates[v].push_back(w);
  if (s.extend(0)) return s.map;
  return std::nullopt;
}

bool are_isomorphic(const Graph& g, const Graph& h, int max_n) {
  return find_isomorphism(g, h, max_n).has_value();
}

}  // namespace zf
