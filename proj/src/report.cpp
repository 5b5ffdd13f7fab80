#include "fixnum/report.hpp"

#include "fixnum/autgroup.hpp"
#include "fixnum/errors.hpp"
#include "fixnum/fixing.hpp"
#include "fixnum/lp.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fixnum {

namespace {

// A wheel on n >= 5 vertices: a unique hub adjacent to everything, and the
// rest a cycle of degree-3 vertices.
bool looks_like_wheel(const Graph& g) {
  const int n = g.order();
  if (n < 5) return false;
  int hub = -1;
  for (int v = 0; v < n; ++v) {
    const int d = g.degree(v);
    if (d == n - 1) {
      if (hub >= 0) return false;
      hub = v;
    } else if (d != 3) {
      return false;
    }
  }
  if (hub < 0) return false;
  // Rim vertices have degree 2 among themselves; a connected 2-regular
  // graph is a cycle, and connectivity follows from the hub being one of
  // each rim vertex's three neighbours plus a walk check.
  std::vector<int> rim;
  for (int v = 0; v < n; ++v)
    if (v != hub) rim.push_back(v);
  std::vector<char> seen(n, 0);
  int at = rim[0];
  int prev = -1;
  int steps = 0;
  while (!seen[at]) {
    seen[at] = 1;
    ++steps;
    int next = -1;
    for (int w : g.neighbors(at))
      if (w != hub && w != prev) next = w;
    if (next < 0) return false;
    prev = at;
    at = next;
  }
  return steps == n - 1 && at == rim[0];
}

// Closed form in circulation for wheels: n/(n-2) when n-1 is even,
// n/(n-3) when n-1 is odd.
Rational wheel_closed_form(int n) {
  return (n - 1) % 2 == 0 ? Rational(n) / (n - 2) : Rational(n) / (n - 3);
}

// Value implied by reducing the wheel to its rim cycle: the hub is fixed,
// so the optimum equals (n-1)/f(C_{n-1}) with f(C_k) = k-2 (k even) or
// k-1 (k odd).
Rational wheel_rim_value(int n) {
  const int k = n - 1;
  return Rational(k) / (k % 2 == 0 ? k - 2 : k - 1);
}

std::vector<std::pair<int, Rational>> nonzero_weights(
    const std::vector<Rational>& w) {
  std::vector<std::pair<int, Rational>> out;
  for (int i = 0; i < static_cast<int>(w.size()); ++i)
    if (w[i] != 0) out.emplace_back(i, w[i]);
  return out;
}

void check_consistency(const AnalysisReport& r) {
  if (r.fix_f > Rational(r.fix))
    throw std::logic_error("analysis inconsistency: fix_f exceeds fix");
  if (r.fix_f > Rational(r.n) / 2)
    throw std::logic_error("analysis inconsistency: fix_f exceeds n/2");
  if (r.dim_f && r.fix_f > *r.dim_f)
    throw std::logic_error("analysis inconsistency: fix_f exceeds dim_f");
}

nlohmann::json weights_json(const std::vector<std::pair<int, Rational>>& w) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [v, q] : w)
    arr.push_back({v, rational_to_string(q)});
  return arr;
}

} // namespace

AnalysisReport analyze_graph(const Graph& g, const AnalysisOptions& opt) {
  AnalysisReport r;
  r.graph_name = g.name();
  r.n = g.order();
  r.m = g.size();
  r.connected = is_connected(g);

  const PermGroup aut = automorphisms(g);
  r.rigid = aut.is_trivial();
  r.group_order = aut.order().str();
  r.orbits = aut.orbits();
  const ActiveCore ac = active_and_core(aut);
  r.active = ac.active;
  r.core = ac.core;
  r.twin_classes = twin_partition(g);

  const FixedGraph fg = fixed_graph(g, aut);
  r.active_pair_count = fg.pairs.size();
  if (!r.rigid) r.f_min = f_min(fg);

  const FixingNumber fn = fixing_number(g, aut);
  r.fix = fn.value;
  r.fixing_witness = fn.witness;

  // Cross-check the fixing number against the 0/1 cover over the pair
  // rows; the two need not coincide a priori, so mismatches are reported
  // rather than assumed away.
  try {
    CoverLp cover = CoverLp::from_fixed_graph(fg);
    cover.reduce();
    const int ilp = integral_cover_optimum(cover);
    r.cover_optimum = ilp;
    if (ilp != r.fix)
      r.notes.push_back("pair-cover optimum " + std::to_string(ilp) +
                        " differs from fixing number " +
                        std::to_string(r.fix));
  } catch (const cap_exceeded&) {
    r.notes.push_back("pair-cover cross-check skipped (size cap)");
  }

  if (opt.with_upper_fixing) {
    const UpperFixingNumber up = upper_fixing_number(g, aut, opt.cap);
    r.upper_fixing = up.value;
    r.upper_fixing_witness = up.witness;
  }
  if (opt.with_fixed_number) r.fixed_number = fixed_number(g, aut, opt.cap);

  const LpSolution ff = fractional_fixing_number(g, aut);
  r.fix_f = ff.value;
  r.fix_f_weights = nonzero_weights(ff.weights);

  if (opt.with_dimf && r.connected) {
    const LpSolution dm = fractional_metric_dimension(g);
    r.dim_f = dm.value;
    r.dim_f_weights = nonzero_weights(dm.weights);
  }

  if (looks_like_wheel(g)) {
    const Rational closed = wheel_closed_form(r.n);
    if (r.fix_f != closed) {
      std::string note = "paper-mismatch: wheel closed form gives " +
                         rational_to_string(closed) + ", LP gives " +
                         rational_to_string(r.fix_f);
      if (r.fix_f == wheel_rim_value(r.n))
        note += " (matches the rim-cycle reduction)";
      r.notes.push_back(note);
    }
  }

  check_consistency(r);
  return r;
}

std::string report_to_json(const AnalysisReport& r) {
  nlohmann::json j;
  j["graph"] = r.graph_name;
  j["n"] = r.n;
  j["m"] = r.m;
  j["connected"] = r.connected;
  j["rigid"] = r.rigid;
  j["group_order"] = r.group_order;
  j["orbits"] = r.orbits;
  j["active"] = r.active;
  j["core"] = r.core;
  j["twin_classes"] = r.twin_classes;
  j["active_pair_count"] = r.active_pair_count;
  if (r.f_min) j["f"] = *r.f_min;
  j["fix"] = r.fix;
  j["fixing_witness"] = r.fixing_witness;
  if (r.cover_optimum) j["cover_optimum"] = *r.cover_optimum;
  if (r.upper_fixing) {
    j["upper_fixing"] = *r.upper_fixing;
    j["upper_fixing_witness"] = r.upper_fixing_witness;
  }
  if (r.fixed_number) j["fixed_number"] = *r.fixed_number;
  j["fix_f"] = rational_to_string(r.fix_f);
  j["fix_f_weights"] = weights_json(r.fix_f_weights);
  if (r.dim_f) {
    j["dim_f"] = rational_to_string(*r.dim_f);
    j["dim_f_weights"] = weights_json(r.dim_f_weights);
  }
  j["notes"] = r.notes;
  return j.dump() + "\n";
}

namespace {

std::string int_list(const std::vector<int>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + "}";
}

std::string set_list(const std::vector<std::vector<int>>& sets) {
  std::string s;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (i) s += " ";
    s += int_list(sets[i]);
  }
  return s;
}

std::string weight_list(const std::vector<std::pair<int, Rational>>& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += " ";
    s += std::to_string(w[i].first) + ":" + rational_to_string(w[i].second);
  }
  return s.empty() ? "-" : s;
}

} // namespace

std::string report_to_table(const AnalysisReport& r) {
  std::ostringstream out;
  const auto row = [&out](const std::string& key, const std::string& value) {
    out << "  " << key;
    for (std::size_t i = key.size(); i < 18; ++i) out << ' ';
    out << value << "\n";
  };
  out << "graph " << (r.graph_name.empty() ? "(unnamed)" : r.graph_name)
      << "\n";
  row("vertices", std::to_string(r.n));
  row("edges", std::to_string(r.m));
  row("connected", r.connected ? "yes" : "no");
  row("group order", r.group_order);
  row("orbits", set_list(r.orbits));
  row("active", int_list(r.active));
  row("core", int_list(r.core));
  row("twin classes", set_list(r.twin_classes));
  row("active pairs", std::to_string(r.active_pair_count));
  row("f", r.f_min ? std::to_string(*r.f_min) : "undefined (rigid)");
  row("fix", std::to_string(r.fix));
  row("fixing witness", int_list(r.fixing_witness));
  if (r.cover_optimum) row("pair cover", std::to_string(*r.cover_optimum));
  if (r.upper_fixing) {
    row("upper fixing", std::to_string(*r.upper_fixing));
    row("upper witness", int_list(r.upper_fixing_witness));
  }
  if (r.fixed_number) row("fixed number", std::to_string(*r.fixed_number));
  row("fix_f", rational_to_string(r.fix_f));
  row("fix_f weights", weight_list(r.fix_f_weights));
  if (r.dim_f) {
    row("dim_f", rational_to_string(*r.dim_f));
    row("dim_f weights", weight_list(r.dim_f_weights));
  }
  for (const std::string& note : r.notes) out << "  note: " << note << "\n";
  return out.str();
}

} // namespace fixnum
