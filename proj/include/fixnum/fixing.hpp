#pragma once

#include "fixnum/graph.hpp"
#include "fixnum/perm_group.hpp"
#include "fixnum/rational.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace fixnum {

// Vertices in orbits of size >= 2 (active) and the rest (core).
struct ActiveCore {
  std::vector<int> active;
  std::vector<int> core;
};
ActiveCore active_and_core(const PermGroup& aut);
ActiveCore active_and_core(const Graph& g);

// Unordered distinct pairs {u,v} with O(u) = O(v), sorted (u < v, lex).
std::vector<std::pair<int, int>> active_pairs(const PermGroup& aut);

// F(u,v): vertices x whose stabilizer orbits separate u from v, i.e.
// O_x(u) != O_x(v).  Always contains u and v; equals {u,v} iff u,v are
// twins; equals all of V when O(u) != O(v).
std::vector<int> fixing_neighborhood(const PermGroup& aut, int u, int v);
std::vector<int> fixing_neighborhood(const Graph& g, int u, int v);

// F(x): unordered distinct pairs {u,v} with O_x(u) != O_x(v); satisfies
// {u,v} in F(x) iff x in F(u,v).
std::vector<std::pair<int, int>> fixed_neighborhood(const PermGroup& aut, int x);
std::vector<std::pair<int, int>> fixed_neighborhood(const Graph& g, int x);

// R(u,v): vertices at different distances from u and v.  Requires a
// connected graph; R(u,v) is always a subset of F(u,v).
std::vector<int> resolving_neighborhood(const DistanceMatrix& d, int u, int v);
std::vector<int> resolving_neighborhood(const Graph& g, int u, int v);

// Incidence structure of active pairs versus vertices: row i has a one in
// column x exactly when x separates pair i.
struct FixedGraph {
  int n = 0;                               // column count = |V(G)|
  std::vector<std::pair<int, int>> pairs;  // rows, sorted (u < v, lex)
  std::vector<VertexSet> incidence;        // one bit row per pair
  std::size_t edge_count() const;
};
FixedGraph fixed_graph(const Graph& g, const PermGroup& aut);
FixedGraph fixed_graph(const Graph& g);

// {"incidence":[[0/1,...],...],"pairs":[[u,v],...]}
std::string fixed_graph_to_json(const FixedGraph& fg);
// Dense text: first line "r n", then r rows of n space-separated 0/1.
std::string b_matrix_text(const FixedGraph& fg);

// f(G) = min |F(u,v)| over active pairs; undefined on rigid graphs.
int f_min(const FixedGraph& fg);
int f_min(const Graph& g);

// True iff the pointwise stabilizer of s is trivial.
bool is_fixing_set(const PermGroup& aut, const std::vector<int>& s);
bool is_fixing_set(const Graph& g, const std::vector<int>& s);

struct FixingNumber {
  int value = 0;
  std::vector<int> witness;  // a minimum fixing set
};
// Minimum size of a fixing set: greedy largest-orbit upper bound, then
// iterative deepening over orbit representatives.
FixingNumber fixing_number(const Graph& g, const PermGroup& aut);
FixingNumber fixing_number(const Graph& g);

struct UpperFixingNumber {
  int value = 0;
  std::vector<int> witness;  // a maximum-cardinality minimal fixing set
};
// Maximum cardinality of an inclusion-minimal fixing set.  Exponential:
// capped at max_n vertices and an internal group-enumeration budget.
UpperFixingNumber upper_fixing_number(const Graph& g, const PermGroup& aut,
                                      int max_n = 14);
UpperFixingNumber upper_fixing_number(const Graph& g, int max_n = 14);

// Least k such that every k-subset of V is a fixing set (0 for rigid
// graphs); equals 1 + max |fix(pi)| over non-identity automorphisms.
int fixed_number(const Graph& g, const PermGroup& aut, int max_n = 14);
int fixed_number(const Graph& g, int max_n = 14);

// Bounds l/2*(l-k+1) <= |E(I(G))| <= n*(C(n,2)-k+1) on the fixed graph's
// edge count, where l = |A(G)|.
struct EdgeBoundReport {
  int k = 0;
  int active_count = 0;       // l
  std::size_t edge_count = 0; // |E(I(G))|, unordered-pair convention
  Rational lower;
  long long upper = 0;
  bool lower_ok = false;
  bool upper_ok = false;
  bool passed() const { return lower_ok && upper_ok; }
};
// Evaluates the bounds at a caller-supplied k (no k-fixedness gate).
EdgeBoundReport edge_bound_report(const Graph& g, const PermGroup& aut, int k);
// Requires fix(G) = fxd(G) = k >= 1 and rejects otherwise, naming both.
EdgeBoundReport edge_bound_check(const Graph& g, int max_n = 14);

} // namespace fixnum
