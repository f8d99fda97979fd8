#pragma once

#include "zf/characterize.hpp"
#include "zf/search.hpp"

// Theorem suites run over graph6 corpora, plus the corpus-verify driver
// shared by the CLI and the acceptance tests.

namespace zf {

struct SuiteOptions {
  SearchBudget budget{.max_n_exact_z = 10, .max_n_force_enum = 6};
  int jobs = 1;
  // Destination for empirically detected exceptional zigzag graphs
  // (structural pass, brute-force fail); empty disables the files.
  std::string exceptions_path;
  std::string exceptions_json_path;
};

struct SuiteResult {
  std::string name;
  long checked = 0;
  long violations = 0;
  long skipped = 0;  // budget overruns, skipped and counted
  std::vector<std::string> violating;  // graph6 of offenders, sorted
};

// All labeled graphs on n vertices spanned by two disjoint induced paths;
// a superset of every graph with Z = 2 (force chains of a minimum set
// form two such paths).
std::vector<Graph> two_parallel_path_graphs(int n);

std::vector<std::string> suite_names();

SuiteResult run_suite(const std::string& name, const std::vector<Graph>& corpus,
                      const SuiteOptions& options);

std::vector<SuiteResult> run_corpus_verify(const std::vector<Graph>& corpus,
                                           const std::vector<std::string>& suites,
                                           const SuiteOptions& options);

std::string suites_to_csv(const std::vector<SuiteResult>& results);
std::string suites_to_json(const std::vector<SuiteResult>& results);

// Labeled Table rows for the generalized star S(e1,e2,e3), 1<e1<e2<e3:
// minimum sets as label pairs with computed pt and the closed-form value.
struct GenStarRow {
  std::string a, b;    // vertex labels of the minimum zero forcing set
  int pt = 0;
  int closed_form = 0;
};
std::vector<GenStarRow> genstar_table(int e1, int e2, int e3,
                                      const SearchBudget& budget = {});

}  // namespace zf
