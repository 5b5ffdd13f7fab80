#pragma once

#include "fixnum/graph.hpp"
#include "fixnum/rational.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fixnum {

struct AnalysisOptions {
  bool with_upper_fixing = false;
  bool with_fixed_number = false;
  bool with_dimf = false;
  // Size cap for the exponential-cost optional fields (upper fixing number
  // and fixed number); exceeding it raises cap_exceeded.
  int cap = 14;
};

struct AnalysisReport {
  std::string graph_name;
  int n = 0;
  std::size_t m = 0;
  bool connected = false;
  bool rigid = false;
  std::string group_order;  // decimal string
  std::vector<std::vector<int>> orbits;
  std::vector<int> active;  // vertices in orbits of size >= 2
  std::vector<int> core;    // fixed points of the whole group
  std::vector<std::vector<int>> twin_classes;
  std::size_t active_pair_count = 0;
  std::optional<int> f_min;  // min |F(u,v)|; absent on rigid graphs
  int fix = 0;
  std::vector<int> fixing_witness;
  std::optional<int> cover_optimum;  // 0/1 cover over the pair rows
  std::optional<int> upper_fixing;
  std::vector<int> upper_fixing_witness;
  std::optional<int> fixed_number;
  Rational fix_f;
  std::vector<std::pair<int, Rational>> fix_f_weights;  // nonzero only
  std::optional<Rational> dim_f;  // connected graphs, on request
  std::vector<std::pair<int, Rational>> dim_f_weights;
  std::vector<std::string> notes;
};

// Full exact analysis of one graph; optional exponential fields only when
// flagged.  Output is deterministic for a fixed input and option set.
AnalysisReport analyze_graph(const Graph& g, const AnalysisOptions& opt = {});

std::string report_to_json(const AnalysisReport& r);
std::string report_to_table(const AnalysisReport& r);

} // namespace fixnum
