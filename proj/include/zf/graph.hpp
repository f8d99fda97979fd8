#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

// Small simple undirected graphs on vertices 0..n-1, adjacency kept as
// 64-bit masks (graph6 short form caps n at 62, which is far beyond what
// the exponential searches here can touch anyway).

namespace zf {

using VertexSet = std::uint64_t;

inline int popcount(VertexSet s) { return __builtin_popcountll(s); }
inline int lowest_bit(VertexSet s) { return __builtin_ctzll(s); }
inline VertexSet bit(int v) { return VertexSet{1} << v; }
inline bool contains(VertexSet s, int v) { return (s >> v) & 1; }

std::vector<int> set_to_vector(VertexSet s);
VertexSet vector_to_set(const std::vector<int>& vs);

class BudgetError : public std::runtime_error {
 public:
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t byte_offset)
      : std::runtime_error(what + " (byte " + std::to_string(byte_offset) + ")"),
        offset(byte_offset) {}
  std::size_t offset;
};

class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : n_(n), adj_(n, 0) {
    if (n < 0 || n > 62) throw std::invalid_argument("order must be in [0,62]");
  }

  int order() const { return n_; }
  int edge_count() const;

  void add_edge(int u, int v);
  bool has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return contains(adj_[u], v);
  }
  VertexSet neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
  }
  int degree(int v) const { return popcount(neighbors(v)); }
  VertexSet all_vertices() const {
    return n_ == 0 ? 0 : (~VertexSet{0} >> (64 - n_));
  }
  std::vector<std::pair<int, int>> edges() const;

  // Optional human-readable names for fixture vertices (u1, w3, hub, ...).
  void set_label(int v, std::string name);
  const std::string& label(int v) const;
  std::optional<int> find_label(const std::string& name) const;

  bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("vertex out of range");
  }
  int n_ = 0;
  std::vector<VertexSet> adj_;
  std::vector<std::string> labels_;
};

// graph6, short form only. A leading ">>graph6<<" header is tolerated.
Graph parse_graph6(const std::string& text);
std::string encode_graph6(const Graph& g);
std::vector<Graph> read_graph6_file(const std::string& path);

struct MatchingSpec {
  std::vector<int> mu;  // mu[i] = partner of vertex i of H1 among 0..n-1 of H2
  static MatchingSpec identity(int n);
  static MatchingSpec petersen();  // (1 2 3 4 5 -> 1 4 2 5 3), zero-based
  void validate(int n) const;
};

// Named families.
Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
Graph star(int r);  // K_{1,r}, center 0
// Three arms of e1 <= e2 <= e3 vertices joined at a degree-3 center.
// Labels: center "v", leaf of arm i "u{i}", neighbor of center on arm i "w{i}".
Graph generalized_star(int e1, int e2, int e3);
Graph t_shaped_tree(int n);  // S(1,1,n-3)
Graph comb(int k);           // leaf appended to each vertex of P_k
Graph wheel5();              // hub "a" adjacent to 4-cycle b-c-d-e
Graph dart();                // K4 minus an edge, pendant on a degree-3 vertex
Graph hypercube(int s);
Graph petersen();
Graph path_plus_isolated(int n);  // P_{n-1} disjoint-union P_1

Graph cartesian_product(const Graph& g, const Graph& h);
Graph matching_graph(const Graph& h1, const Graph& h2, const MatchingSpec& mu);

struct BasicMetrics {
  int components = 0;
  int diameter = 0;  // max eccentricity within components
  bool diameter_infinite = false;
  std::vector<int> degrees;
};
BasicMetrics basic_metrics(const Graph& g);

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);
bool is_path_graph(const Graph& g);
int component_count(const Graph& g);
std::vector<VertexSet> components(const Graph& g);

struct DeletionResult {
  Graph graph;
  std::vector<int> old_of_new;  // new vertex -> original vertex
};
DeletionResult delete_vertex(const Graph& g, int v);

// Exact isomorphism by backtracking over degree-partition-refined maps.
// Practical to n = 12; beyond that a BudgetError is thrown.
std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h,
                                                 int max_n = 12);
bool are_isomorphic(const Graph& g, const Graph& h, int max_n = 12);

}  // namespace zf
