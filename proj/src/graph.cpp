#include "zf/graph.hpp"

#include <algorithm>
#include <queue>

namespace zf {

std::vector<int> set_to_vector(VertexSet s) {
  std::vector<int> out;
  while (s) {
    int v = lowest_bit(s);
    out.push_back(v);
    s &= s - 1;
  }
  return out;
}

VertexSet vector_to_set(const std::vector<int>& vs) {
  VertexSet s = 0;
  for (int v : vs) s |= bit(v);
  return s;
}

int Graph::edge_count() const {
  int total = 0;
  for (VertexSet row : adj_) total += popcount(row);
  return total / 2;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("self-loop");
  adj_[u] |= bit(v);
  adj_[v] |= bit(u);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (int v : set_to_vector(adj_[u] & ~((bit(u) << 1) - 1)))
      out.emplace_back(u, v);
  return out;
}

void Graph::set_label(int v, std::string name) {
  check_vertex(v);
  if (labels_.empty()) labels_.resize(n_);
  labels_[v] = std::move(name);
}

const std::string& Graph::label(int v) const {
  check_vertex(v);
  static const std::string empty;
  return labels_.empty() ? empty : labels_[v];
}

std::optional<int> Graph::find_label(const std::string& name) const {
  for (int v = 0; v < n_ && !labels_.empty(); ++v)
    if (labels_[v] == name) return v;
  return std::nullopt;
}

void MatchingSpec::validate(int n) const {
  if ((int)mu.size() != n) throw std::invalid_argument("matching size mismatch");
  std::vector<bool> seen(n, false);
  for (int t : mu) {
    if (t < 0 || t >= n || seen[t])
      throw std::invalid_argument("matching is not a bijection");
    seen[t] = true;
  }
}

MatchingSpec MatchingSpec::identity(int n) {
  MatchingSpec m;
  m.mu.resize(n);
  for (int i = 0; i < n; ++i) m.mu[i] = i;
  return m;
}

MatchingSpec MatchingSpec::petersen() { return MatchingSpec{{0, 3, 1, 4, 2}}; }

Graph cartesian_product(const Graph& g, const Graph& h) {
  if (g.order() == 0 || h.order() == 0)
    throw std::invalid_argument("cartesian product of empty graph");
  int ng = g.order(), nh = h.order();
  Graph p(ng * nh);
  auto id = [nh](int a, int b) { return a * nh + b; };
  for (int a = 0; a < ng; ++a)
    for (int b = 0; b < nh; ++b) {
      for (int b2 : set_to_vector(h.neighbors(b)))
        if (b2 > b) p.add_edge(id(a, b), id(a, b2));
      for (int a2 : set_to_vector(g.neighbors(a)))
        if (a2 > a) p.add_edge(id(a, b), id(a2, b));
    }
  return p;
}

Graph matching_graph(const Graph& h1, const Graph& h2, const MatchingSpec& mu) {
  int n = h1.order();
  if (h2.order() != n) throw std::invalid_argument("matching graph order mismatch");
  mu.validate(n);
  Graph g(2 * n);
  for (auto [u, v] : h1.edges()) g.add_edge(u, v);
  for (auto [u, v] : h2.edges()) g.add_edge(n + u, n + v);
  for (int i = 0; i < n; ++i) g.add_edge(i, n + mu.mu[i]);
  return g;
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> comps;
  VertexSet left = g.all_vertices();
  while (left) {
    int start = lowest_bit(left);
    VertexSet comp = bit(start), frontier = comp;
    while (frontier) {
      VertexSet next = 0;
      for (int v : set_to_vector(frontier)) next |= g.neighbors(v);
      frontier = next & ~comp;
      comp |= frontier;
    }
    comps.push_back(comp);
    left &= ~comp;
  }
  return comps;
}

int component_count(const Graph& g) { return (int)components(g).size(); }

bool is_connected(const Graph& g) { return component_count(g) <= 1; }

bool is_tree(const Graph& g) {
  return is_connected(g) && g.edge_count() == g.order() - 1;
}

bool is_path_graph(const Graph& g) {
  if (g.order() == 1) return true;
  if (!is_tree(g)) return false;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) > 2) return false;
  return true;
}

BasicMetrics basic_metrics(const Graph& g) {
  BasicMetrics m;
  m.components = component_count(g);
  m.diameter_infinite = m.components > 1;
  m.degrees.resize(g.order());
  for (int v = 0; v < g.order(); ++v) m.degrees[v] = g.degree(v);
  // BFS from every vertex; diameter is the max finite distance.
  for (int s = 0; s < g.order(); ++s) {
    VertexSet seen = bit(s), frontier = seen;
    int dist = 0;
    while (frontier) {
      VertexSet next = 0;
      for (int v : set_to_vector(frontier)) next |= g.neighbors(v);
      frontier = next & ~seen;
      if (frontier) {
        ++dist;
        seen |= frontier;
      }
    }
    m.diameter = std::max(m.diameter, dist);
  }
  return m;
}

DeletionResult delete_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) throw std::invalid_argument("vertex out of range");
  DeletionResult r;
  r.graph = Graph(g.order() - 1);
  std::vector<int> new_of_old(g.order(), -1);
  for (int u = 0, next = 0; u < g.order(); ++u)
    if (u != v) {
      new_of_old[u] = next++;
      r.old_of_new.push_back(u);
    }
  for (auto [a, b] : g.edges())
    if (a != v && b != v) r.graph.add_edge(new_of_old[a], new_of_old[b]);
  return r;
}

}  // namespace zf
