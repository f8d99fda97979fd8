// Command-line front end: analyze, family, corpus-verify, witness.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "zf/characterize.hpp"
#include "zf/nullity.hpp"
#include "zf/suites.hpp"

namespace {

struct Options {
  std::string g6;
  std::string g6_file;
  std::vector<std::string> family;
  std::vector<std::string> suites;
  // The library default (10) is deliberately conservative; the CLI raises
  // it so family reports like genstar 2 5 11 (n = 19, Z = 2) run as-is.
  int budget_z = 20;
  int budget_forces = 6;
  int jobs = 1;
  std::string out;
  std::string format = "json";
  std::string exceptions = "zigzag_exceptions.g6";
  int steps = 1;
};

zf::SearchBudget budget_of(const Options& o) {
  if (o.budget_z < 1 || o.budget_forces < 1)
    throw zf::BudgetError("budgets must be positive");
  zf::SearchBudget b;
  b.max_n_exact_z = o.budget_z;
  b.max_n_force_enum = o.budget_forces;
  return b;
}

zf::Graph family_graph(const std::vector<std::string>& spec) {
  if (spec.empty()) throw std::invalid_argument("empty family spec");
  const std::string& name = spec[0];
  std::vector<int> a;
  for (std::size_t i = 1; i < spec.size(); ++i) a.push_back(std::stoi(spec[i]));
  auto want = [&](std::size_t k) {
    if (a.size() != k)
      throw std::invalid_argument("family " + name + " takes " +
                                  std::to_string(k) + " argument(s)");
  };
  if (name == "path") return want(1), zf::path(a[0]);
  if (name == "cycle") return want(1), zf::cycle(a[0]);
  if (name == "complete") return want(1), zf::complete(a[0]);
  if (name == "star") return want(1), zf::star(a[0]);
  if (name == "genstar")
    return want(3), zf::generalized_star(a[0], a[1], a[2]);
  if (name == "tshape") return want(1), zf::t_shaped_tree(a[0]);
  if (name == "comb") return want(1), zf::comb(a[0]);
  if (name == "wheel5") return want(0), zf::wheel5();
  if (name == "dart") return want(0), zf::dart();
  if (name == "hypercube") return want(1), zf::hypercube(a[0]);
  if (name == "petersen") return want(0), zf::petersen();
  throw std::invalid_argument("unknown family: " + name);
}

std::vector<zf::Graph> resolve_graphs(const Options& o) {
  int sources = !o.g6.empty() + !o.g6_file.empty() + !o.family.empty();
  if (sources != 1)
    throw std::invalid_argument("exactly one of --g6/--g6-file/--family");
  if (!o.g6.empty()) return {zf::parse_graph6(o.g6)};
  if (!o.g6_file.empty()) return zf::read_graph6_file(o.g6_file);
  return {family_graph(o.family)};
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw std::ios_base::failure("cannot write " + o.out);
  f << text;
  if (!text.empty() && text.back() != '\n') f << '\n';
}

int cmd_analyze(const Options& o) {
  auto graphs = resolve_graphs(o);
  zf::SearchBudget budget = budget_of(o);
  if (o.format == "csv") {
    std::ostringstream os;
    os << zf::analysis_csv_header() << '\n';
    for (const zf::Graph& g : graphs)
      os << zf::analysis_csv_row(g, zf::analyze(g, budget)) << '\n';
    emit(o, os.str());
  } else {
    auto arr = nlohmann::json::array();
    for (const zf::Graph& g : graphs)
      arr.push_back(
          nlohmann::json::parse(zf::analysis_to_json(g, zf::analyze(g, budget))));
    emit(o, arr.size() == 1 ? arr[0].dump(2) : arr.dump(2));
  }
  return 0;
}

int cmd_family(const Options& o) {
  if (o.family.empty()) throw std::invalid_argument("family requires --family");
  zf::SearchBudget budget = budget_of(o);
  if (o.family[0] == "genstar") {
    if (o.family.size() != 4)
      throw std::invalid_argument("genstar takes three arm lengths");
    auto rows = zf::genstar_table(std::stoi(o.family[1]), std::stoi(o.family[2]),
                                  std::stoi(o.family[3]), budget);
    bool all_match = true;
    if (o.format == "csv") {
      std::ostringstream os;
      os << "a,b,pt,closed_form,match\n";
      for (const auto& r : rows) {
        os << r.a << ',' << r.b << ',' << r.pt << ',' << r.closed_form << ','
           << (r.pt == r.closed_form) << '\n';
        all_match = all_match && r.pt == r.closed_form;
      }
      emit(o, os.str());
    } else {
      auto arr = nlohmann::json::array();
      for (const auto& r : rows) {
        arr.push_back({{"set", {r.a, r.b}},
                       {"pt", r.pt},
                       {"closed_form", r.closed_form},
                       {"match", r.pt == r.closed_form}});
        all_match = all_match && r.pt == r.closed_form;
      }
      emit(o, arr.dump(2));
    }
    return all_match ? 0 : 1;
  }
  if (o.family[0] == "comb") {
    if (o.family.size() != 2)
      throw std::invalid_argument("comb takes the spine length");
    zf::CombReport r = zf::comb_analysis(std::stoi(o.family[1]), budget);
    nlohmann::json j{{"k", r.k},        {"n", r.n},
                     {"diam", r.diam},  {"Z", r.z},
                     {"pt", r.pt},      {"exact", r.exact},
                     {"leaf_lower_bound", r.leaf_lower_bound}};
    emit(o, j.dump(2));
    return 0;
  }
  return cmd_analyze(o);
}

int cmd_corpus_verify(const Options& o) {
  if (o.g6_file.empty())
    throw std::invalid_argument("corpus-verify requires --g6-file");
  auto corpus = zf::read_graph6_file(o.g6_file);
  zf::SuiteOptions so;
  so.budget = budget_of(o);
  so.jobs = o.jobs;
  so.exceptions_path = o.exceptions;
  if (!o.exceptions.empty()) so.exceptions_json_path = o.exceptions + ".json";
  auto results = zf::run_corpus_verify(corpus, o.suites, so);
  emit(o, o.format == "csv" ? zf::suites_to_csv(results)
                            : zf::suites_to_json(results));
  long violations = 0;
  for (const auto& r : results) {
    violations += r.violations;
    for (const std::string& g6 : r.violating) {
      std::cerr << "violation in " << r.name << ": " << g6 << '\n';
      zf::Graph g = zf::parse_graph6(g6);
      std::cerr << zf::analysis_to_json(g, zf::analyze(g, so.budget)) << '\n';
    }
  }
  return violations ? 1 : 0;
}

int cmd_witness(const Options& o) {
  if (o.family.empty()) throw std::invalid_argument("witness requires --family");
  zf::InvolutionFamily fam;
  int n = 2;
  if (o.family[0] == "P2") {
    fam = zf::InvolutionFamily::P2;
  } else if (o.family[0] == "Kn") {
    if (o.family.size() != 2)
      throw std::invalid_argument("witness --family Kn takes n");
    fam = zf::InvolutionFamily::Kn;
    n = std::stoi(o.family[1]);
  } else {
    throw std::invalid_argument("witness families: P2, Kn N");
  }
  auto report = zf::certify_family(fam, n, o.steps, budget_of(o));
  emit(o, zf::witness_to_json(report));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zero forcing propagation time toolkit"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--g6", o.g6, "inline graph6 record")->envname("ZF_G6");
    cmd->add_option("--g6-file", o.g6_file, "graph6 file")->envname("ZF_G6_FILE");
    cmd->add_option("--family", o.family, "family name + integer args")
        ->envname("ZF_FAMILY");
    cmd->add_option("--budget-z", o.budget_z, "max n for exact Z search")
        ->envname("ZF_BUDGET_Z");
    cmd->add_option("--budget-forces", o.budget_forces,
                    "max n for force-set enumeration")
        ->envname("ZF_BUDGET_FORCES");
    cmd->add_option("--jobs", o.jobs, "worker count")->envname("ZF_JOBS");
    cmd->add_option("--out", o.out, "output path (default stdout)")
        ->envname("ZF_OUT");
    cmd->add_option("--format", o.format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->envname("ZF_FORMAT");
  };

  auto* analyze = app.add_subcommand("analyze", "full report for one graph");
  add_common(analyze);
  auto* family = app.add_subcommand("family", "family tables (genstar, comb)");
  add_common(family);
  auto* verify = app.add_subcommand("corpus-verify", "theorem suites over a corpus");
  add_common(verify);
  verify->add_option("--suites", o.suites, "suite names (default: all)")
      ->delimiter(',')
      ->envname("ZF_SUITES");
  verify->add_option("--exceptions", o.exceptions,
                     "zigzag exceptions output path")
      ->envname("ZF_EXCEPTIONS");
  auto* witness = app.add_subcommand("witness", "nullity certificates");
  add_common(witness);
  witness->add_option("--steps", o.steps, "number of doubling steps")
      ->envname("ZF_STEPS");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(o);
    if (family->parsed()) return cmd_family(o);
    if (verify->parsed()) return cmd_corpus_verify(o);
    return cmd_witness(o);
  } catch (const zf::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 3;
  } catch (const zf::BudgetError& e) {
    std::cerr << "budget error: " << e.what() << '\n';
    return 2;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
