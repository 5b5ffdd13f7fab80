#pragma once

#include "fixnum/graph.hpp"
#include "fixnum/perm_group.hpp"

#include <cstdint>
#include <vector>

namespace fixnum {

// Automorphism group of g, computed by individualization–refinement
// backtracking over equitable vertex partitions; discovered automorphisms
// seed a Schreier–Sims chain, so order and membership queries never
// enumerate the group.
PermGroup automorphisms(const Graph& g);

// Exhaustive backtracking enumeration with degree/distance-profile pruning;
// an independent oracle for small graphs.  Rejects n > max_n and aborts if
// more than `budget` automorphisms accumulate.
std::vector<Perm> brute_force_automorphisms(const Graph& g, int max_n = 20,
                                            std::uint64_t budget = 2'000'000);

// Orbit of u under the stabilizer of x, O_x(u).
std::vector<int> stabilizer_orbit(const PermGroup& aut, int x, int u);

bool is_vertex_transitive(const PermGroup& aut);
bool is_vertex_transitive(const Graph& g);

} // namespace fixnum
