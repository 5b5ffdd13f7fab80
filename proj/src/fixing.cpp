#include "fixnum/fixing.hpp"

#include "fixnum/autgroup.hpp"
#include "fixnum/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace fixnum {

namespace {

// Group-element enumeration budget for the fixed-point-set computations
// (fixed_number, upper_fixing_number); beyond it the group is too large to
// walk element by element.
constexpr std::uint64_t kElementBudget = 4'000'000;

void check_distinct_pair(int n, int u, int v) {
  if (u < 0 || u >= n || v < 0 || v >= n)
    throw std::invalid_argument("vertex out of range");
  if (u == v) throw std::invalid_argument("pair requires u != v");
}

// Maximal fixed-point bitmasks over the non-identity elements; the masks
// characterize non-fixing sets (S is non-fixing iff S lies inside one).
std::vector<std::uint32_t> maximal_fixed_masks(const PermGroup& aut) {
  std::vector<std::uint32_t> masks;
  aut.for_each_element(kElementBudget, [&](const Perm& p) {
    if (p.is_identity()) return;
    std::uint32_t m = 0;
    for (int v = 0; v < p.degree(); ++v)
      if (p(v) == v) m |= std::uint32_t{1} << v;
    masks.push_back(m);
  });
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  std::vector<std::uint32_t> maximal;
  for (std::uint32_t m : masks) {
    bool dominated = false;
    for (std::uint32_t other : masks)
      if (other != m && (m & ~other) == 0) {
        dominated = true;
        break;
      }
    if (!dominated) maximal.push_back(m);
  }
  return maximal;
}

} // namespace

ActiveCore active_and_core(const PermGroup& aut) {
  ActiveCore out;
  const auto orbits = aut.orbits();
  std::vector<char> active(aut.degree(), 0);
  for (const auto& orb : orbits)
    if (orb.size() >= 2)
      for (int v : orb) active[v] = 1;
  for (int v = 0; v < aut.degree(); ++v)
    (active[v] ? out.active : out.core).push_back(v);
  return out;
}

ActiveCore active_and_core(const Graph& g) {
  return active_and_core(automorphisms(g));
}

std::vector<std::pair<int, int>> active_pairs(const PermGroup& aut) {
  const auto ids = aut.orbit_ids();
  std::vector<int> orbit_size(ids.size(), 0);
  for (int id : ids) ++orbit_size[id];
  std::vector<std::pair<int, int>> pairs;
  const int n = aut.degree();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (ids[u] == ids[v]) pairs.emplace_back(u, v);
  return pairs;
}

std::vector<int> fixing_neighborhood(const PermGroup& aut, int u, int v) {
  const int n = aut.degree();
  check_distinct_pair(n, u, v);
  std::vector<int> out;
  for (int x = 0; x < n; ++x) {
    const auto orbit_u = aut.point_stabilizer(x).orbit(u);
    if (!std::binary_search(orbit_u.begin(), orbit_u.end(), v))
      out.push_back(x);
  }
  return out;
}

std::vector<int> fixing_neighborhood(const Graph& g, int u, int v) {
  return fixing_neighborhood(automorphisms(g), u, v);
}

std::vector<std::pair<int, int>> fixed_neighborhood(const PermGroup& aut,
                                                    int x) {
  const int n = aut.degree();
  if (x < 0 || x >= n) throw std::invalid_argument("vertex out of range");
  const auto ids = aut.point_stabilizer(x).orbit_ids();
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (ids[u] != ids[v]) out.emplace_back(u, v);
  return out;
}

std::vector<std::pair<int, int>> fixed_neighborhood(const Graph& g, int x) {
  return fixed_neighborhood(automorphisms(g), x);
}

std::vector<int> resolving_neighborhood(const DistanceMatrix& d, int u,
                                        int v) {
  check_distinct_pair(d.order(), u, v);
  if (!d.connected())
    throw std::invalid_argument(
        "resolving neighborhood requires a connected graph");
  std::vector<int> out;
  for (int x = 0; x < d.order(); ++x)
    if (d(x, u) != d(x, v)) out.push_back(x);
  return out;
}

std::vector<int> resolving_neighborhood(const Graph& g, int u, int v) {
  return resolving_neighborhood(distance_matrix(g), u, v);
}

std::size_t FixedGraph::edge_count() const {
  std::size_t total = 0;
  for (const auto& row : incidence) total += row.count();
  return total;
}

FixedGraph fixed_graph(const Graph& g, const PermGroup& aut) {
  FixedGraph fg;
  fg.n = g.order();
  fg.pairs = active_pairs(aut);
  // One stabilizer per column; row bits then come from orbit-id lookups.
  std::vector<std::vector<int>> stab_ids(fg.n);
  for (int x = 0; x < fg.n; ++x)
    stab_ids[x] = aut.point_stabilizer(x).orbit_ids();
  fg.incidence.reserve(fg.pairs.size());
  for (const auto& [u, v] : fg.pairs) {
    VertexSet row(fg.n);
    for (int x = 0; x < fg.n; ++x)
      if (stab_ids[x][u] != stab_ids[x][v]) row.set(x);
    fg.incidence.push_back(std::move(row));
  }
  return fg;
}

FixedGraph fixed_graph(const Graph& g) {
  return fixed_graph(g, automorphisms(g));
}

std::string fixed_graph_to_json(const FixedGraph& fg) {
  nlohmann::json j;
  j["pairs"] = nlohmann::json::array();
  for (const auto& [u, v] : fg.pairs) j["pairs"].push_back({u, v});
  j["incidence"] = nlohmann::json::array();
  for (const auto& row : fg.incidence) {
    nlohmann::json bits = nlohmann::json::array();
    for (int x = 0; x < fg.n; ++x) bits.push_back(row.test(x) ? 1 : 0);
    j["incidence"].push_back(std::move(bits));
  }
  return j.dump() + "\n";
}

std::string b_matrix_text(const FixedGraph& fg) {
  std::ostringstream out;
  out << fg.pairs.size() << ' ' << fg.n << '\n';
  for (const auto& row : fg.incidence) {
    for (int x = 0; x < fg.n; ++x) {
      if (x) out << ' ';
      out << (row.test(x) ? 1 : 0);
    }
    out << '\n';
  }
  return out.str();
}

int f_min(const FixedGraph& fg) {
  if (fg.pairs.empty())
    throw std::invalid_argument("f(G) undefined for rigid graphs");
  std::size_t best = fg.incidence.front().count();
  for (const auto& row : fg.incidence) best = std::min(best, row.count());
  return static_cast<int>(best);
}

int f_min(const Graph& g) { return f_min(fixed_graph(g)); }

bool is_fixing_set(const PermGroup& aut, const std::vector<int>& s) {
  for (int v : s)
    if (v < 0 || v >= aut.degree())
      throw std::invalid_argument("vertex out of range");
  return aut.pointwise_stabilizer(s).is_trivial();
}

bool is_fixing_set(const Graph& g, const std::vector<int>& s) {
  return is_fixing_set(automorphisms(g), s);
}

namespace {

// Largest orbit size of the group; stabilizer orbits only refine, so this
// bounds how much one more fixed point can divide the order by.
std::uint64_t largest_orbit(const PermGroup& k) {
  std::uint64_t best = 1;
  for (const auto& orb : k.orbits()) best = std::max<std::uint64_t>(best, orb.size());
  return best;
}

std::optional<std::vector<int>> fixing_search(const PermGroup& k,
                                              std::vector<int>& chosen,
                                              int budget) {
  if (k.is_trivial()) return chosen;
  if (static_cast<int>(chosen.size()) == budget) return std::nullopt;
  const int remaining = budget - static_cast<int>(chosen.size());
  BigInt reachable = 1;
  const BigInt orb_bound(largest_orbit(k));
  for (int i = 0; i < remaining; ++i) reachable *= orb_bound;
  if (k.order() > reachable) return std::nullopt;
  // One representative per orbit suffices: conjugating a candidate fixing
  // set by a group element maps witnesses between orbit members.
  for (const auto& orb : k.orbits()) {
    if (orb.size() < 2) continue;
    chosen.push_back(orb.front());
    if (auto got = fixing_search(k.point_stabilizer(orb.front()), chosen,
                                 budget))
      return got;
    chosen.pop_back();
  }
  return std::nullopt;
}

} // namespace

FixingNumber fixing_number(const Graph& g, const PermGroup& aut) {
  (void)g;
  if (aut.is_trivial()) return {};
  // Greedy upper bound: repeatedly pin the smallest vertex of a largest
  // orbit until the stabilizer collapses.
  std::vector<int> greedy;
  PermGroup k = aut;
  while (!k.is_trivial()) {
    const auto orbits = k.orbits();
    const auto largest = std::max_element(
        orbits.begin(), orbits.end(), [](const auto& a, const auto& b) {
          return a.size() < b.size();
        });
    greedy.push_back(largest->front());
    k = k.point_stabilizer(largest->front());
  }
  for (int target = 0; target < static_cast<int>(greedy.size()); ++target) {
    std::vector<int> chosen;
    if (auto witness = fixing_search(aut, chosen, target))
      return {target, *witness};
  }
  return {static_cast<int>(greedy.size()), greedy};
}

FixingNumber fixing_number(const Graph& g) {
  return fixing_number(g, automorphisms(g));
}

UpperFixingNumber upper_fixing_number(const Graph& g, const PermGroup& aut,
                                      int max_n) {
  // Hard ceiling independent of the caller's cap: the subset scan below
  // walks 2^n bitmasks.
  constexpr int kScanCeiling = 25;
  const int n = g.order();
  if (n > std::min(max_n, kScanCeiling))
    throw cap_exceeded("upper fixing number capped at n <= " +
                       std::to_string(std::min(max_n, kScanCeiling)) +
                       ", got n = " + std::to_string(n));
  if (aut.is_trivial()) return {};
  const auto masks = maximal_fixed_masks(aut);
  const std::uint32_t all = (std::uint32_t{1} << n) - 1;
  const auto fixes = [&masks](std::uint32_t s) {
    for (std::uint32_t m : masks)
      if ((s & ~m) == 0) return false;  // s lies inside a fixed-point set
    return true;
  };
  UpperFixingNumber best;
  best.value = -1;
  for (std::uint32_t s = 0; s <= all; ++s) {
    const int size = __builtin_popcount(s);
    if (size <= best.value || !fixes(s)) continue;
    bool minimal = true;
    for (int v = 0; v < n && minimal; ++v)
      if ((s >> v) & 1) minimal = !fixes(s & ~(std::uint32_t{1} << v));
    if (minimal) {
      best.value = size;
      best.witness.clear();
      for (int v = 0; v < n; ++v)
        if ((s >> v) & 1) best.witness.push_back(v);
    }
  }
  return best;
}

UpperFixingNumber upper_fixing_number(const Graph& g, int max_n) {
  return upper_fixing_number(g, automorphisms(g), max_n);
}

int fixed_number(const Graph& g, const PermGroup& aut, int max_n) {
  const int n = g.order();
  if (n > max_n)
    throw cap_exceeded("fixed number capped at n <= " + std::to_string(max_n) +
                       ", got n = " + std::to_string(n));
  if (aut.is_trivial()) return 0;
  // fxd = 1 + the largest set pointwise-fixed by a non-identity element.
  int most_fixed = 0;
  aut.for_each_element(kElementBudget, [&](const Perm& p) {
    if (p.is_identity()) return;
    int fixed = 0;
    for (int v = 0; v < n; ++v)
      if (p(v) == v) ++fixed;
    most_fixed = std::max(most_fixed, fixed);
  });
  return 1 + most_fixed;
}

int fixed_number(const Graph& g, int max_n) {
  return fixed_number(g, automorphisms(g), max_n);
}

EdgeBoundReport edge_bound_report(const Graph& g, const PermGroup& aut,
                                  int k) {
  EdgeBoundReport report;
  report.k = k;
  const auto ac = active_and_core(aut);
  report.active_count = static_cast<int>(ac.active.size());
  report.edge_count = fixed_graph(g, aut).edge_count();
  const long long l = report.active_count;
  const long long n = g.order();
  report.lower = Rational(l) * Rational(l - k + 1) / 2;
  report.upper = n * (n * (n - 1) / 2 - k + 1);
  report.lower_ok = Rational(static_cast<long long>(report.edge_count)) >=
                    report.lower;
  report.upper_ok =
      static_cast<long long>(report.edge_count) <= report.upper;
  return report;
}

EdgeBoundReport edge_bound_check(const Graph& g, int max_n) {
  const PermGroup aut = automorphisms(g);
  const FixingNumber fix = fixing_number(g, aut);
  const int fxd = fixed_number(g, aut, max_n);
  if (fix.value != fxd || fix.value < 1)
    throw std::invalid_argument(
        "edge bound check requires a k-fixed graph, but fix(G) = " +
        std::to_string(fix.value) + " and fxd(G) = " + std::to_string(fxd));
  return edge_bound_report(g, aut, fix.value);
}

} // namespace fixnum
