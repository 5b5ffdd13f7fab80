#include "fixnum/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

namespace fixnum {

namespace {

void check_vertex(int n, int v, const char* what) {
  if (v < 0 || v >= n)
    throw std::invalid_argument(std::string(what) + " index " +
                                std::to_string(v) + " out of range 0.." +
                                std::to_string(n - 1));
}

} // namespace

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges,
             std::string name)
    : n_(n), name_(std::move(name)) {
  if (n <= 0) throw std::invalid_argument("graph order must be positive");
  adj_.assign(n_, VertexSet(n_));
  for (const auto& [u, v] : edges) {
    check_vertex(n_, u, "edge endpoint");
    check_vertex(n_, v, "edge endpoint");
    if (u == v)
      throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    adj_[u].set(v);
    adj_[v].set(u);
  }
  nbrs_.assign(n_, {});
  for (int u = 0; u < n_; ++u)
    for (int v = adj_[u].find_first(); v != static_cast<int>(VertexSet::npos);
         v = adj_[u].find_next(v))
      nbrs_[u].push_back(v);
  int twice_m = 0;
  for (int u = 0; u < n_; ++u) twice_m += degree(u);
  m_ = twice_m / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u)
    for (int v : nbrs_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph Graph::with_name(std::string name) const {
  Graph g = *this;
  g.name_ = std::move(name);
  return g;
}

Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges,
                     std::string name) {
  return Graph(n, edges, std::move(name));
}

DistanceMatrix::DistanceMatrix(const Graph& g)
    : n_(g.order()), connected_(true) {
  d_.assign(n_, std::vector<int>(n_, unreachable));
  std::vector<int> queue;
  queue.reserve(n_);
  for (int s = 0; s < n_; ++s) {
    auto& row = d_[s];
    row[s] = 0;
    queue.clear();
    queue.push_back(s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int u = queue[head];
      for (int v : g.neighbors(u))
        if (row[v] == unreachable) {
          row[v] = row[u] + 1;
          queue.push_back(v);
        }
    }
    if (static_cast<int>(queue.size()) != n_) connected_ = false;
  }
}

DistanceMatrix distance_matrix(const Graph& g) { return DistanceMatrix(g); }

bool is_connected(const Graph& g) {
  std::vector<char> seen(g.order(), 0);
  std::vector<int> queue{0};
  seen[0] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (int v : g.neighbors(queue[head]))
      if (!seen[v]) {
        seen[v] = 1;
        queue.push_back(v);
      }
  return static_cast<int>(queue.size()) == g.order();
}

bool are_twins(const DistanceMatrix& d, int u, int v) {
  const int n = d.order();
  check_vertex(n, u, "vertex");
  check_vertex(n, v, "vertex");
  if (u == v) throw std::invalid_argument("are_twins requires u != v");
  for (int w = 0; w < n; ++w) {
    if (w == u || w == v) continue;
    if (d(u, w) != d(v, w)) return false;
  }
  return true;
}

bool are_twins(const Graph& g, int u, int v) {
  return are_twins(distance_matrix(g), u, v);
}

std::vector<std::vector<int>> twin_partition(const Graph& g) {
  const int n = g.order();
  const DistanceMatrix d(g);
  std::vector<int> cls(n, -1);
  std::vector<std::vector<int>> classes;
  for (int u = 0; u < n; ++u) {
    if (cls[u] >= 0) continue;
    cls[u] = static_cast<int>(classes.size());
    classes.push_back({u});
    for (int v = u + 1; v < n; ++v)
      if (cls[v] < 0 && are_twins(d, u, v)) {
        cls[v] = cls[u];
        classes.back().push_back(v);
      }
  }
  // The twin relation is an equivalence relation in theory; verify that the
  // greedy grouping above did not hide a transitivity failure, and that
  // every non-trivial class induces a null or complete subgraph.
  for (const auto& c : classes) {
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = i + 1; j < c.size(); ++j) {
        if (!are_twins(d, c[i], c[j]))
          throw std::logic_error("twin relation is not transitive");
        if (g.adjacent(c[i], c[j]) != g.adjacent(c[0], c[1]))
          throw std::logic_error(
              "twin class induces neither a null nor a complete subgraph");
      }
  }
  return classes;
}

VertexDeletion delete_vertex(const Graph& g, int v) {
  const int n = g.order();
  check_vertex(n, v, "vertex");
  if (n < 2)
    throw std::invalid_argument("cannot delete the only vertex of K1");
  std::vector<int> original_label;
  std::vector<int> new_index(n, -1);
  original_label.reserve(n - 1);
  for (int u = 0; u < n; ++u)
    if (u != v) {
      new_index[u] = static_cast<int>(original_label.size());
      original_label.push_back(u);
    }
  std::vector<std::pair<int, int>> edges;
  for (const auto& [a, b] : g.edges())
    if (a != v && b != v) edges.emplace_back(new_index[a], new_index[b]);
  return VertexDeletion{Graph(n - 1, edges, g.name()),
                        std::move(original_label)};
}

} // namespace fixnum
