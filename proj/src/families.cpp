#include "zf/graph.hpp"

namespace zf {

Graph path(int n) {
  if (n < 1) throw std::invalid_argument("P_n needs n >= 1");
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle(int n) {
  if (n < 3) throw std::invalid_argument("C_n needs n >= 3");
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph complete(int n) {
  if (n < 1) throw std::invalid_argument("K_n needs n >= 1");
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph star(int r) {
  if (r < 1) throw std::invalid_argument("K_{1,r} needs r >= 1");
  Graph g(r + 1);
  for (int i = 1; i <= r; ++i) g.add_edge(0, i);
  return g;
}

Graph generalized_star(int e1, int e2, int e3) {
  if (!(1 <= e1 && e1 <= e2 && e2 <= e3))
    throw std::invalid_argument("S(e1,e2,e3) needs 1 <= e1 <= e2 <= e3");
  // Vertex 0 is the center v; arm i occupies a contiguous run ending at its
  // leaf u_i, starting at the center's neighbor w_i.
  int arms[3] = {e1, e2, e3};
  Graph g(1 + e1 + e2 + e3);
  g.set_label(0, "v");
  int next = 1;
  for (int a = 0; a < 3; ++a) {
    int prev = 0;
    for (int i = 0; i < arms[a]; ++i, ++next) {
      g.add_edge(prev, next);
      if (i == 0) g.set_label(next, "w" + std::to_string(a + 1));
      prev = next;
    }
    g.set_label(prev, "u" + std::to_string(a + 1));
  }
  return g;
}

Graph t_shaped_tree(int n) {
  if (n < 4) throw std::invalid_argument("S(1,1,n-3) needs n >= 4");
  return generalized_star(1, 1, n - 3);
}

Graph comb(int k) {
  if (k < 1) throw std::invalid_argument("comb needs k >= 1");
  // Spine 0..k-1 in path order, leaf of spine vertex i is k+i.
  Graph g(2 * k);
  for (int i = 0; i + 1 < k; ++i) g.add_edge(i, i + 1);
  for (int i = 0; i < k; ++i) g.add_edge(i, k + i);
  return g;
}

Graph wheel5() {
  // Hub a = 0 adjacent to the 4-cycle b-c-d-e.
  Graph g(5);
  const char* names = "abcde";
  for (int i = 0; i < 5; ++i) g.set_label(i, std::string(1, names[i]));
  for (int i = 1; i <= 4; ++i) g.add_edge(0, i);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  g.add_edge(3, 4);
  g.add_edge(4, 1);
  return g;
}

Graph dart() {
  // K4 on {0,1,2,3} minus the edge {2,3}, pendant 4 on the degree-3 vertex 0.
  Graph g(5);
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(0, 3);
  g.add_edge(1, 2);
  g.add_edge(1, 3);
  g.add_edge(0, 4);
  return g;
}

Graph hypercube(int s) {
  if (s < 1 || s > 5) throw std::invalid_argument("Q_s supported for 1 <= s <= 5");
  Graph g = path(2);
  for (int i = 1; i < s; ++i) g = cartesian_product(g, path(2));
  return g;
}

Graph petersen() {
  return matching_graph(cycle(5), cycle(5), MatchingSpec::petersen());
}

Graph path_plus_isolated(int n) {
  if (n < 2) throw std::invalid_argument("P_{n-1} u P_1 needs n >= 2");
  Graph g(n);
  for (int i = 0; i + 2 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

}  // namespace zf
