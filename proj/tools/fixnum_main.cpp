#include "fixnum/autgroup.hpp"
#include "fixnum/errors.hpp"
#include "fixnum/families.hpp"
#include "fixnum/fixing.hpp"
#include "fixnum/graph.hpp"
#include "fixnum/graph_io.hpp"
#include "fixnum/lp.hpp"
#include "fixnum/report.hpp"
#include "fixnum/verify.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace {

using namespace fixnum;

void require_params(const std::vector<int>& params, std::size_t want,
                    const std::string& family) {
  if (params.size() != want)
    throw std::invalid_argument(family + " takes " + std::to_string(want) +
                                " integer parameter(s), got " +
                                std::to_string(params.size()));
}

Graph load_required(const std::string& path, const std::string& flag) {
  if (path.empty())
    throw std::invalid_argument("this family requires " + flag +
                                " <graph file>");
  return load_graph_file(path);
}

// Fiber spec string: one comma-separated token per base vertex, each
// 'c<size>' (complete) or 'n<size>' (null), e.g. "c2,n3,c2".
std::vector<FiberSpec> parse_fibers(const std::string& text) {
  std::vector<FiberSpec> out;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    if (token.size() < 2 || (token[0] != 'c' && token[0] != 'n'))
      throw std::invalid_argument(
          "bad fiber token '" + token +
          "'; expected c<size> (complete) or n<size> (null)");
    int size = 0;
    try {
      size = std::stoi(token.substr(1));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad fiber size in token '" + token + "'");
    }
    out.push_back({token[0] == 'c', size});
  }
  if (out.empty()) throw std::invalid_argument("empty fiber list");
  return out;
}

Graph build_family(const std::string& family, const std::vector<int>& params,
                   const std::string& left, const std::string& right,
                   const std::string& fibers) {
  if (family == "cycle") {
    require_params(params, 1, family);
    return cycle(params[0]);
  }
  if (family == "path") {
    require_params(params, 1, family);
    return path(params[0]);
  }
  if (family == "complete") {
    require_params(params, 1, family);
    return complete(params[0]);
  }
  if (family == "null") {
    require_params(params, 1, family);
    return null_graph(params[0]);
  }
  if (family == "star") {
    require_params(params, 1, family);
    return star(params[0]);
  }
  if (family == "wheel") {
    require_params(params, 1, family);
    return wheel(params[0]);
  }
  if (family == "fan") {
    require_params(params, 1, family);
    return fan(params[0]);
  }
  if (family == "friendship") {
    require_params(params, 1, family);
    return friendship(params[0]);
  }
  if (family == "c_gadget") {
    require_params(params, 1, family);
    return c_gadget(params[0]);
  }
  if (family == "complete-minus-edge") {
    require_params(params, 1, family);
    return complete_minus_edge(params[0]);
  }
  if (family == "complete-minus-matching") {
    require_params(params, 1, family);
    return complete_minus_perfect_matching(params[0]);
  }
  if (family == "multipartite") {
    if (params.empty())
      throw std::invalid_argument("multipartite takes part sizes");
    return complete_multipartite(params);
  }
  if (family == "grid") {
    require_params(params, 2, family);
    return grid(params[0], params[1]);
  }
  if (family == "hamming") {
    require_params(params, 2, family);
    return hamming(params[0], params[1]);
  }
  if (family == "johnson") {
    require_params(params, 2, family);
    return johnson(params[0], params[1]);
  }
  if (family == "tree") {
    require_params(params, 2, family);
    return tree_with_fixf(params[0], params[1]);
  }
  if (family == "spider") {
    require_params(params, 2, family);
    return spider(params[0], params[1]);
  }
  if (family == "gnp") {
    require_params(params, 2, family);
    return erdos_renyi(params[0], static_cast<std::uint32_t>(params[1]));
  }
  if (family == "rtree") {
    require_params(params, 2, family);
    return random_tree(params[0], static_cast<std::uint32_t>(params[1]));
  }
  if (family == "join") {
    require_params(params, 0, family);
    return join(load_required(left, "--left"),
                load_required(right, "--right"));
  }
  if (family == "corona") {
    require_params(params, 0, family);
    return corona(load_required(left, "--left"),
                  load_required(right, "--right"));
  }
  if (family == "composition") {
    require_params(params, 0, family);
    return composition(load_required(left, "--left"),
                       load_required(right, "--right"));
  }
  if (family == "double") {
    require_params(params, 0, family);
    return double_graph(load_required(left, "--left"));
  }
  if (family == "genlex") {
    require_params(params, 0, family);
    if (fibers.empty())
      throw std::invalid_argument("genlex requires --fibers c2,n3,...");
    GeneralizedLexicoSpec spec{load_required(left, "--left"),
                               parse_fibers(fibers)};
    return generalized_lexicographic(spec);
  }
  throw std::invalid_argument(
      "unknown family '" + family +
      "'; known: cycle path complete null star wheel fan friendship "
      "c_gadget complete-minus-edge complete-minus-matching multipartite "
      "grid hamming johnson tree spider gnp rtree join corona composition "
      "double genlex");
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << text;
  if (!out) throw std::runtime_error("failed writing " + path);
}

int default_cap() {
  if (const char* env = std::getenv("FIXNUM_CAP")) {
    try {
      const int v = std::stoi(env);
      if (v >= 1) return v;
    } catch (const std::exception&) {
    }
    throw std::invalid_argument("FIXNUM_CAP must be a positive integer");
  }
  return 14;
}

int run_gen(const std::string& family, const std::vector<int>& params,
            const std::string& left, const std::string& right,
            const std::string& fibers, const std::string& out_path) {
  const Graph g = build_family(family, params, left, right, fibers);
  if (out_path.empty()) {
    std::cout << graph_to_json(g);
    return 0;
  }
  save_graph_file(g, out_path);
  std::cout << g.name() << ": n=" << g.order() << " m=" << g.size() << " -> "
            << out_path << "\n";
  return 0;
}

int run_analyze(const std::string& in_path, bool as_json, bool with_upper,
                bool with_fixed, bool with_dimf, int cap,
                const std::string& out_path) {
  const Graph g = load_graph_file(in_path);
  AnalysisOptions opt;
  opt.with_upper_fixing = with_upper;
  opt.with_fixed_number = with_fixed;
  opt.with_dimf = with_dimf;
  opt.cap = cap;
  const AnalysisReport report = analyze_graph(g, opt);
  const std::string text =
      as_json ? report_to_json(report) : report_to_table(report);
  if (out_path.empty())
    std::cout << text;
  else
    write_text_file(out_path, text);
  return 0;
}

int run_fixedgraph(const std::string& in_path, const std::string& out_path,
                   int cap) {
  const Graph g = load_graph_file(in_path);
  const PermGroup aut = automorphisms(g);
  const FixedGraph fg = fixed_graph(g, aut);
  const std::string json = fixed_graph_to_json(fg);
  const std::string matrix = b_matrix_text(fg);
  if (out_path.empty()) {
    std::cout << json << matrix;
  } else {
    write_text_file(out_path, json);
    write_text_file(out_path + ".b.txt", matrix);
    std::cout << "fixed graph of " << (g.name().empty() ? "input" : g.name())
              << ": " << fg.pairs.size() << " pairs -> " << out_path
              << " (matrix in " << out_path << ".b.txt)\n";
  }
  std::cout << "|E(I(G))| = " << fg.edge_count() << "\n";
  try {
    const EdgeBoundReport r = edge_bound_check(g, cap);
    std::cout << "edge bounds at k = " << r.k << ": "
              << rational_to_string(r.lower) << " <= " << r.edge_count
              << " <= " << r.upper << " ("
              << (r.passed() ? "hold" : "VIOLATED") << ")\n";
    return r.passed() ? 0 : 1;
  } catch (const std::invalid_argument& e) {
    std::cout << "edge bounds skipped: " << e.what() << "\n";
  } catch (const cap_exceeded& e) {
    std::cout << "edge bounds skipped: " << e.what() << "\n";
  }
  return 0;
}

int run_verify(const std::string& suite, bool as_json) {
  const std::vector<SuiteResult> results =
      suite == "all" ? run_all_verify_suites()
                     : std::vector<SuiteResult>{run_verify_suite(suite)};
  std::cout << (as_json ? verify_json(results) : verify_text(results));
  for (const SuiteResult& r : results)
    if (!r.passed()) return 1;
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact graph symmetry invariants: fixing numbers and their "
               "fractional relaxations"};
  app.require_subcommand(1);

  // gen
  std::string family;
  std::vector<int> params;
  std::string left, right, fibers, gen_out;
  CLI::App* gen = app.add_subcommand("gen", "generate a graph family member");
  gen->add_option("family", family, "family name")->required();
  gen->add_option("params", params, "integer parameters");
  gen->add_option("--left", left, "left/base operand graph file");
  gen->add_option("--right", right, "right operand graph file");
  gen->add_option("--fibers", fibers, "genlex fibers, e.g. c2,n3");
  gen->add_option("-o,--out", gen_out, "output graph file");

  // analyze
  std::string analyze_in, analyze_out;
  bool analyze_json = false, with_upper = false, with_fixed = false,
       with_dimf = false;
  int cap = 14;
  try {
    cap = default_cap();
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  CLI::App* analyze =
      app.add_subcommand("analyze", "compute invariants of a graph file");
  analyze->add_option("input", analyze_in, "graph file")->required();
  analyze->add_flag("--json", analyze_json, "emit JSON instead of a table");
  analyze->add_flag("--with-upper-fixing", with_upper,
                    "also compute the upper fixing number");
  analyze->add_flag("--with-fixed-number", with_fixed,
                    "also compute the fixed number");
  analyze->add_flag("--with-dimf", with_dimf,
                    "also compute the fractional metric dimension");
  analyze->add_option("--cap", cap,
                      "vertex cap for the exponential optional fields");
  analyze->add_option("-o,--out", analyze_out, "write the report here");

  // fixedgraph
  std::string fg_in, fg_out;
  CLI::App* fixedgraph = app.add_subcommand(
      "fixedgraph", "emit the pair/vertex incidence structure");
  fixedgraph->add_option("input", fg_in, "graph file")->required();
  fixedgraph->add_option("-o,--out", fg_out, "output JSON file");

  // verify
  std::string suite;
  bool verify_as_json = false;
  CLI::App* verify =
      app.add_subcommand("verify", "run the verification suites");
  verify->add_option("suite", suite, "suite name or 'all'")->required();
  verify->add_flag("--json", verify_as_json, "emit JSON results");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*gen) return run_gen(family, params, left, right, fibers, gen_out);
    if (*analyze)
      return run_analyze(analyze_in, analyze_json, with_upper, with_fixed,
                         with_dimf, cap, analyze_out);
    if (*fixedgraph) return run_fixedgraph(fg_in, fg_out, cap);
    if (*verify) return run_verify(suite, verify_as_json);
  } catch (const cap_exceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
