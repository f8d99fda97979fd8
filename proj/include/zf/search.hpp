#pragma once

#include "zf/forcing.hpp"
#include "zf/graph.hpp"

// Exact search: Z(G), enumeration of minimum zero forcing sets and force
// sets, pt/PT/Eff and the derived statistics.

namespace zf {

struct SearchBudget {
  int max_n_exact_z = 10;
  int max_n_force_enum = 6;
  // Cap on enumerated force sets per (G, B); exceeding it raises a
  // BudgetError unless allow_partial is set by the caller.
  std::size_t max_force_sets = 200000;
};

struct AnalysisReport {
  int z = 0;
  int pt = 0;
  int pt_max = 0;  // PT(G)
  int pd = 0;      // PT - pt
  std::vector<int> realized_times;
  std::vector<VertexSet> min_zfs;  // lexicographic
  std::vector<VertexSet> eff;
  VertexSet eff_intersection = 0;
};

struct ZResult {
  int z;
  VertexSet witness;
};

ZResult zero_forcing_number(const Graph& g, const SearchBudget& budget = {});

std::vector<VertexSet> enumerate_min_zfs(const Graph& g,
                                         const SearchBudget& budget = {});

AnalysisReport analyze(const Graph& g, const SearchBudget& budget = {});

VertexSet efficient_intersection(const Graph& g, const SearchBudget& budget = {});

struct ForceSetEnumeration {
  std::vector<ForceSet> force_sets;
  bool partial = false;  // cap hit; listing is incomplete
};

// Every valid unordered set of forces of B, found by DFS over one-force-
// at-a-time chronologies with visited-state memoization.
ForceSetEnumeration enumerate_force_sets(const Graph& g, VertexSet b,
                                         const SearchBudget& budget = {},
                                         bool allow_partial = false);

// Thm: a connected graph of order >= 2 never has a unique efficient set.
bool verify_nonuniqueness(const Graph& g, const SearchBudget& budget = {});

std::string analysis_to_json(const Graph& g, const AnalysisReport& r);
std::string analysis_csv_header();
std::string analysis_csv_row(const Graph& g, const AnalysisReport& r);

}  // namespace zf
