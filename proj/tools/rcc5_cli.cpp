// Command-line frontend: solve constraint networks, classify relation
// subsets, run the verification sweeps, or query the exact small-scale
// oracle. Exit status: 0 = SAT / pass, 1 = UNSAT / fail, 2 = error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "rcc5/rcc5.hpp"

namespace {

constexpr int kExitSat = 0;
constexpr int kExitUnsat = 1;
constexpr int kExitError = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

rcc5::Network load_network(const std::string& path) {
  return rcc5::parse(read_file(path));
}

void print_model(const rcc5::Interpretation& model) {
  std::cout << "MODEL\n" << model.to_string();
}

int cmd_solve(const std::string& path, const std::string& algorithm,
              bool want_model) {
  rcc5::Network net = load_network(path);
  const rcc5::CompositionTable& table = rcc5::composition_table();
  rcc5::SolveOptions opts{.build_model = want_model};

  rcc5::SolveResult result;
  if (algorithm == "auto") {
    result = rcc5::dispatch(net, table, opts);
  } else if (algorithm == "a17") {
    result = rcc5::solve_a17(net, opts);
  } else if (algorithm == "a20") {
    result = rcc5::solve_a20(net, opts);
  } else if (algorithm == "r514") {
    result = rcc5::solve_r5_14(net, table, opts);
  } else if (algorithm == "pc") {
    result = rcc5::solve_pc(net, table, opts);
  } else if (algorithm == "bt") {
    result = rcc5::solve_backtracking(net, table, opts);
  } else {
    throw CLI::ValidationError("--algorithm",
                               "unknown algorithm: " + algorithm);
  }

  std::cout << (result.sat() ? "SAT" : "UNSAT") << " (" << result.algorithm
            << ")\n";
  if (result.sat() && want_model) {
    if (!result.model || !rcc5::satisfies(*result.model, net))
      throw std::logic_error("model failed re-verification");
    print_model(*result.model);
  }
  return result.sat() ? kExitSat : kExitUnsat;
}

rcc5::Subclass parse_subclass(const std::vector<std::string>& tokens) {
  rcc5::Subclass s = rcc5::Subclass::none();
  for (const std::string& tok : tokens) {
    auto rel = rcc5::Relation::parse(tok);
    if (!rel) throw std::runtime_error("cannot parse relation: " + tok);
    s = s.with(*rel);
  }
  return s;
}

int cmd_classify(const std::vector<std::string>& tokens,
                 const std::string& file) {
  std::vector<std::string> all = tokens;
  if (!file.empty()) {
    std::istringstream in(read_file(file));
    std::string line;
    while (std::getline(in, line)) {
      while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
        line.pop_back();
      size_t start = line.find_first_not_of(" \t");
      if (start == std::string::npos || line[start] == '#') continue;
      all.push_back(line.substr(start));
    }
  }
  rcc5::Subclass s = parse_subclass(all);
  rcc5::Classification c = rcc5::classify(s, rcc5::composition_table());
  if (c.verdict == rcc5::Tractability::Polynomial) {
    std::cout << "POLYNOMIAL (";
    for (size_t i = 0; i < c.containing.size(); ++i)
      std::cout << (i ? ", " : "") << c.containing[i];
    std::cout << ")\n";
  } else {
    std::cout << "NP-COMPLETE (" << c.kernel << ")\n";
  }
  return kExitSat;
}

void emit_table(const rcc5::CompositionTable& table) {
  using rcc5::Basic;
  for (unsigned i = 0; i < rcc5::kNumBasic; ++i)
    for (unsigned j = 0; j < rcc5::kNumBasic; ++j)
      std::cout << rcc5::Relation::only(Basic(i)).to_string() << " o "
                << rcc5::Relation::only(Basic(j)).to_string() << " = "
                << table.entry(Basic(i), Basic(j)).to_string() << "\n";
}

int cmd_verify(bool want_table, unsigned workers) {
  const rcc5::CompositionTable& table = rcc5::composition_table();
  if (want_table) emit_table(table);

  const rcc5::CompositionTable derived = rcc5::derive_composition_table();
  bool table_ok = derived == rcc5::kCompositionFixture;
  std::cout << "composition table: "
            << (table_ok ? "derivation matches fixture" : "MISMATCH") << "\n";

  std::cout << "catalog cardinalities:";
  bool catalog_ok = true;
  for (const auto& member : rcc5::Catalog::tractable()) {
    std::cout << " " << member.name << "=" << member.subclass.size();
    catalog_ok = catalog_ok && rcc5::is_subalgebra(member.subclass, table);
  }
  std::cout << (catalog_ok ? " (all subalgebras)" : " (SUBALGEBRA FAILURE)")
            << "\n";

  rcc5::EnumerationReport rep = rcc5::verify_theorem_4_2(table, workers);
  std::cout << rep.subsets_checked << " subsets checked, "
            << rep.failures.size() << " failures\n";

  rcc5::MaximalityReport max = rcc5::verify_maximality(table);
  std::cout << "maximality: " << max.np_complete << "/" << max.entries.size()
            << " one-relation extensions NP-complete\n";

  bool ok = table_ok && catalog_ok && rep.passed() && max.passed();
  std::cout << (ok ? "PASS" : "FAIL") << "\n";
  return ok ? kExitSat : kExitUnsat;
}

int cmd_oracle(const std::string& path) {
  rcc5::Network net = load_network(path);
  rcc5::OracleResult r = rcc5::oracle_satisfiable(net);
  std::cout << (r.satisfiable ? "SAT" : "UNSAT") << " (oracle)\n";
  if (r.satisfiable) {
    if (!r.witness || !rcc5::satisfies(*r.witness, net))
      throw std::logic_error("oracle witness failed re-verification");
    print_model(*r.witness);
  }
  return r.satisfiable ? kExitSat : kExitUnsat;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"RCC-5 qualitative spatial reasoning toolkit"};
  app.require_subcommand(1);

  std::string solve_file, algorithm = "auto";
  bool want_model = false;
  CLI::App* solve = app.add_subcommand("solve", "decide a constraint network");
  solve->add_option("file", solve_file, "network file")->required();
  solve->add_option("--algorithm", algorithm,
                    "auto|a17|a20|r514|pc|bt (default auto)");
  solve->add_flag("--model", want_model, "print a verified witness model");

  std::vector<std::string> classify_rels;
  std::string classify_file;
  CLI::App* classify =
      app.add_subcommand("classify", "classify a relation subset");
  classify->add_option("relations", classify_rels,
                       "relations, e.g. {PO} {PP,PPI}");
  classify->add_option("--file", classify_file,
                       "file with one relation per line");

  bool want_table = false;
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  CLI::App* verify =
      app.add_subcommand("verify", "run the classification sweeps");
  verify->add_flag("--emit-table", want_table,
                   "print the derived composition table");
  verify->add_option("--workers", workers, "worker thread count");

  std::string oracle_file;
  CLI::App* oracle =
      app.add_subcommand("oracle", "exact ground truth (<= 4 variables)");
  oracle->add_option("file", oracle_file, "network file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (solve->parsed()) return cmd_solve(solve_file, algorithm, want_model);
    if (classify->parsed()) return cmd_classify(classify_rels, classify_file);
    if (verify->parsed()) return cmd_verify(want_table, workers);
    if (oracle->parsed()) return cmd_oracle(oracle_file);
  } catch (const rcc5::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
