#include "zf/search.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace zf {

namespace {

// k-subsets of {0..n-1} in lexicographic order of their bit masks
// (Gosper's hack).
template <typename Fn>
void for_each_subset(int n, int k, Fn fn) {
  if (k == 0) {
    fn(VertexSet{0});
    return;
  }
  if (k > n) return;
  VertexSet s = (VertexSet{1} << k) - 1;
  VertexSet limit = VertexSet{1} << n;
  while (s < limit) {
    fn(s);
    VertexSet c = s & -s, r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }
}

void check_z_budget(const Graph& g, const SearchBudget& budget) {
  if (g.order() > budget.max_n_exact_z)
    throw BudgetError("exact Z search limited to n <= " +
                      std::to_string(budget.max_n_exact_z) + " (graph has n = " +
                      std::to_string(g.order()) + ")");
}

}  // namespace

ZResult zero_forcing_number(const Graph& g, const SearchBudget& budget) {
  check_z_budget(g, budget);
  int n = g.order();
  if (n == 0) return {0, 0};
  for (int k = 1; k <= n; ++k) {
    ZResult found{-1, 0};
    for_each_subset(n, k, [&](VertexSet s) {
      if (found.z < 0 && is_zero_forcing_set(g, s)) found = {k, s};
    });
    if (found.z > 0) return found;
  }
  throw std::logic_error("V itself always forces");  // unreachable
}

std::vector<VertexSet> enumerate_min_zfs(const Graph& g,
                                         const SearchBudget& budget) {
  int z = zero_forcing_number(g, budget).z;
  std::vector<VertexSet> out;
  for_each_subset(g.order(), z, [&](VertexSet s) {
    if (is_zero_forcing_set(g, s)) out.push_back(s);
  });
  return out;
}

AnalysisReport analyze(const Graph& g, const SearchBudget& budget) {
  AnalysisReport r;
  r.min_zfs = enumerate_min_zfs(g, budget);
  r.z = r.min_zfs.empty() ? 0 : popcount(r.min_zfs.front());
  std::set<int> times;
  std::map<VertexSet, int> pt_of;
  for (VertexSet b : r.min_zfs) {
    int t = propagate(g, b).propagation_time();
    times.insert(t);
    pt_of[b] = t;
  }
  r.realized_times.assign(times.begin(), times.end());
  r.pt = r.realized_times.empty() ? 0 : r.realized_times.front();
  r.pt_max = r.realized_times.empty() ? 0 : r.realized_times.back();
  r.pd = r.pt_max - r.pt;
  r.eff_intersection = g.all_vertices();
  for (VertexSet b : r.min_zfs)
    if (pt_of[b] == r.pt) {
      r.eff.push_back(b);
      r.eff_intersection &= b;
    }
  if (r.eff.empty()) r.eff_intersection = 0;
  // Remark-level sanity on every analysis.
  int n = g.order();
  if (r.pt_max > n - r.z || (r.z >= 1 && (long long)r.z * r.pt < n - r.z))
    throw std::logic_error("propagation time bounds violated");
  return r;
}

VertexSet efficient_intersection(const Graph& g, const SearchBudget& budget) {
  return analyze(g, budget).eff_intersection;
}

ForceSetEnumeration enumerate_force_sets(const Graph& g, VertexSet b,
                                         const SearchBudget& budget,
                                         bool allow_partial) {
  if (g.order() > budget.max_n_force_enum)
    throw BudgetError("force-set enumeration limited to n <= " +
                      std::to_string(budget.max_n_force_enum));
  if (!is_zero_forcing_set(g, b))
    throw std::invalid_argument("enumerate_force_sets: B does not force G");

  ForceSetEnumeration out;
  std::set<ForceSet> results;
  // State = (colored set, forces so far); explore every legal next force.
  struct State {
    VertexSet colored;
    std::vector<Force> forces;
  };
  std::set<std::pair<VertexSet, std::vector<Force>>> visited;
  std::vector<State> stack{{b, {}}};
  while (!stack.empty()) {
    State st = std::move(stack.back());
    stack.pop_back();
    if (st.colored == g.all_vertices()) {
      ForceSet f;
      f.base = b;
      f.forces = st.forces;
      f.normalize();
      if (results.insert(f).second && results.size() > budget.max_force_sets) {
        results.erase(f);
        if (allow_partial) {
          out.partial = true;
          break;
        }
        throw BudgetError("force-set enumeration exceeded cap of " +
                          std::to_string(budget.max_force_sets));
      }
      continue;
    }
    for (int v : set_to_vector(st.colored)) {
      VertexSet white = g.neighbors(v) & ~st.colored;
      if (popcount(white) != 1) continue;
      int w = lowest_bit(white);
      State next = st;
      next.colored |= bit(w);
      next.forces.push_back({v, w});
      std::sort(next.forces.begin(), next.forces.end());
      if (visited.insert({next.colored, next.forces}).second)
        stack.push_back(std::move(next));
    }
  }
  out.force_sets.assign(results.begin(), results.end());
  return out;
}

bool verify_nonuniqueness(const Graph& g, const SearchBudget& budget) {
  if (g.order() < 2 || !is_connected(g))
    throw std::invalid_argument("verify_nonuniqueness needs a connected graph of order >= 2");
  return analyze(g, budget).eff.size() >= 2;
}

namespace {

std::string set_to_string(VertexSet s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int v : set_to_vector(s)) {
    if (!first) os << ' ';
    os << v;
    first = false;
  }
  os << '}';
  return os.str();
}

}  // namespace

std::string analysis_to_json(const Graph& g, const AnalysisReport& r) {
  nlohmann::json j;
  j["graph6"] = encode_graph6(g);
  j["n"] = g.order();
  j["m"] = g.edge_count();
  j["Z"] = r.z;
  j["pt"] = r.pt;
  j["PT"] = r.pt_max;
  j["pd"] = r.pd;
  j["realized_times"] = r.realized_times;
  auto sets = nlohmann::json::array();
  for (VertexSet b : r.min_zfs) sets.push_back(set_to_vector(b));
  j["min_zfs"] = sets;
  auto eff = nlohmann::json::array();
  for (VertexSet b : r.eff) eff.push_back(set_to_vector(b));
  j["eff"] = eff;
  j["eff_intersection"] = set_to_vector(r.eff_intersection);
  return j.dump();
}

std::string analysis_csv_header() {
  return "graph6,n,m,Z,pt,PT,pd,realized_times,eff_count,eff_intersection";
}

std::string analysis_csv_row(const Graph& g, const AnalysisReport& r) {
  std::ostringstream os;
  os << encode_graph6(g) << ',' << g.order() << ',' << g.edge_count() << ','
     << r.z << ',' << r.pt << ',' << r.pt_max << ',' << r.pd << ',';
  os << '"';
  for (std::size_t i = 0; i < r.realized_times.size(); ++i)
    os << (i ? " " : "") << r.realized_times[i];
  os << "\"," << r.eff.size() << ',' << '"' << set_to_string(r.eff_intersection)
     << '"';
  return os.str();
}

}  // namespace zf
