#pragma once

#include <boost/dynamic_bitset.hpp>

#include <string>
#include <utility>
#include <vector>

namespace fixnum {

using VertexSet = boost::dynamic_bitset<>;

// Simple undirected graph on vertices 0..n-1.  Immutable after
// construction; adjacency is kept both as bit rows (O(1) membership, fast
// row scans) and as sorted neighbor lists (fast sparse iteration).
class Graph {
public:
  Graph(int n, const std::vector<std::pair<int, int>>& edges,
        std::string name = "");

  int order() const { return n_; }
  int size() const { return m_; }
  const std::string& name() const { return name_; }

  bool adjacent(int u, int v) const { return adj_[u].test(v); }
  const VertexSet& adjacency_row(int u) const { return adj_[u]; }
  const std::vector<int>& neighbors(int u) const { return nbrs_[u]; }
  int degree(int u) const { return static_cast<int>(nbrs_[u].size()); }

  // All edges as (u,v) with u < v, lexicographically sorted.
  std::vector<std::pair<int, int>> edges() const;

  Graph with_name(std::string name) const;

private:
  int n_ = 0;
  int m_ = 0;
  std::string name_;
  std::vector<VertexSet> adj_;
  std::vector<std::vector<int>> nbrs_;
};

// Builds a graph from an edge list.  Indices must lie in 0..n-1 and
// self-loops are rejected; duplicate edges are deduplicated.
Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges,
                     std::string name = "");

// All-pairs shortest-path hop counts, computed by BFS from every vertex.
class DistanceMatrix {
public:
  // Sentinel distance for vertex pairs in different components.
  static constexpr int unreachable = -1;

  explicit DistanceMatrix(const Graph& g);

  int order() const { return n_; }
  int operator()(int u, int v) const { return d_[u][v]; }
  bool connected() const { return connected_; }

private:
  int n_;
  bool connected_;
  std::vector<std::vector<int>> d_;
};

DistanceMatrix distance_matrix(const Graph& g);

bool is_connected(const Graph& g);

// True iff d(u,w) = d(v,w) for every w outside {u,v}; unreachable counts
// as equal to unreachable, so the test also works on disconnected graphs.
bool are_twins(const Graph& g, int u, int v);
bool are_twins(const DistanceMatrix& d, int u, int v);

// Equivalence classes of the twin relation extended by equality.  Classes
// are sorted internally and by smallest element.  Verifies as internal
// invariants that the relation is transitive and that every class of size
// >= 2 induces a null or complete subgraph.
std::vector<std::vector<int>> twin_partition(const Graph& g);

struct VertexDeletion {
  Graph graph;                     // on n-1 vertices, indices compacted
  std::vector<int> original_label; // original_label[new index] = old index
};

// Removes vertex v and compacts indices; requires n >= 2.
VertexDeletion delete_vertex(const Graph& g, int v);

} // namespace fixnum
