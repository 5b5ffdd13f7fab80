#pragma once

#include "fixnum/graph.hpp"

#include <cstdint>
#include <vector>

namespace fixnum {

// Deterministic generators with stable vertex numbering; the numbering is
// part of the contract because tests reference specific vertices.

Graph path(int n);        // vertices 0..n-1 along the path; n >= 1
Graph cycle(int n);       // vertices in cyclic order; n >= 3
Graph complete(int n);    // n >= 1
Graph null_graph(int n);  // n >= 1, no edges
Graph star(int n);        // K_{1,n-1}: center 0, leaves 1..n-1; n >= 2

// Consecutive index blocks, one per part; parts nonempty, sizes >= 1.
Graph complete_multipartite(const std::vector<int>& parts);
Graph complete_minus_edge(int n);              // K_n minus edge (0,1); n >= 2
Graph complete_minus_perfect_matching(int n);  // even n >= 2; drops (2i,2i+1)

Graph wheel(int n);  // total order n >= 5: rim cycle 0..n-2, hub n-1
Graph fan(int n);    // path 0..n-1 plus hub n joined to all; n >= 1
// n triangles sharing one vertex: blocks (2i,2i+1), center 2n; n >= 1.
Graph friendship(int n);
// Cycle of length 4n (vertices 0..4n-1) plus pendants: 4n attached to 0
// and 4n+1 attached to 2n; n >= 1.
Graph c_gadget(int n);
Graph grid(int p, int q);  // cartesian product of paths; vertex (i,j) = i*q+j

// Words of length n over 0..k-1 (index = big-endian base-k value); edges
// between words differing in exactly one letter.  n >= 1, k >= 2.
Graph hamming(int n, int k);
// Sorted k-subsets of 0..n-1 in lexicographic order; edges between subsets
// meeting in k-1 elements.  1 <= k < n.
Graph johnson(int n, int k);

// G's vertices first, then H's, with every cross pair adjacent.
Graph join(const Graph& g, const Graph& h);
// G's vertices first, then one H copy per G-vertex in order; copy i spans
// indices m + i*|V(H)| .. m + (i+1)*|V(H)| - 1 and joins to G-vertex i.
Graph corona(const Graph& g, const Graph& h);
// Lexicographic product G[H]: vertex (u,v) = u*|V(H)| + v; requires
// connected G (otherwise the product splits per component).
Graph composition(const Graph& g, const Graph& h);

struct FiberSpec {
  bool complete = false;  // false: independent set fiber
  int size = 1;           // >= 1
};
struct GeneralizedLexicoSpec {
  Graph base;
  std::vector<FiberSpec> fibers;  // one per base vertex
};
// Blow-up of the base: fiber v is a null or complete block, and blocks of
// adjacent base vertices are completely joined.  Fibers occupy consecutive
// index ranges in base-vertex order.
Graph generalized_lexicographic(const GeneralizedLexicoSpec& spec);

// Each vertex u of H becomes the non-adjacent twin pair 2u, 2u+1, with all
// four cross edges per H-edge; H embeds induced on the even indices.
Graph double_graph(const Graph& h);

// Tree of order n made of a path on n-k vertices with k extra leaves at
// its far end.  Valid for 2 <= k <= n-3 or k = n-1 (the star); k = n-2 is
// rejected (no tree of that shape attains the intended value k/2).
Graph tree_with_fixf(int n, int k);

// Center 0 with k legs of lengths m, m+1, ..., m+k-1 (legs laid out
// consecutively).  All leg lengths distinct; m >= 1, k >= 2.
Graph spider(int m, int k);

// Seeded helpers for property tests.  Both consume raw mt19937 outputs
// only, so results are identical across platforms.
Graph erdos_renyi(int n, std::uint32_t seed);  // each edge with odds 1/2
Graph random_tree(int n, std::uint32_t seed);  // vertex i hangs off rng()%i

} // namespace fixnum
