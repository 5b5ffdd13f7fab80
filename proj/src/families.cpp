#include "fixnum/families.hpp"

#include "fixnum/errors.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>

namespace fixnum {

namespace {

// Default ceiling for the generators that can blow up combinatorially
// (hamming/johnson and the product constructions).
constexpr int kMaxVertices = 200;

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

void check_cap(long long n, const std::string& family) {
  if (n > kMaxVertices)
    throw cap_exceeded(family + " would have " + std::to_string(n) +
                       " vertices, above the cap of " +
                       std::to_string(kMaxVertices));
}

using Edges = std::vector<std::pair<int, int>>;

} // namespace

Graph path(int n) {
  require(n >= 1, "path requires n >= 1");
  Edges e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e, "P" + std::to_string(n));
}

Graph cycle(int n) {
  require(n >= 3, "cycle requires n >= 3");
  Edges e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e, "C" + std::to_string(n));
}

Graph complete(int n) {
  require(n >= 1, "complete requires n >= 1");
  Edges e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, e, "K" + std::to_string(n));
}

Graph null_graph(int n) {
  require(n >= 1, "null graph requires n >= 1");
  return Graph(n, {}, "N" + std::to_string(n));
}

Graph star(int n) {
  require(n >= 2, "star requires n >= 2");
  Edges e;
  for (int i = 1; i < n; ++i) e.emplace_back(0, i);
  return Graph(n, e, "K1," + std::to_string(n - 1));
}

Graph complete_multipartite(const std::vector<int>& parts) {
  require(!parts.empty(), "complete multipartite requires at least one part");
  int n = 0;
  std::vector<int> offset;
  std::string name = "K";
  for (std::size_t p = 0; p < parts.size(); ++p) {
    require(parts[p] >= 1, "part sizes must be >= 1");
    offset.push_back(n);
    n += parts[p];
    name += (p ? "," : "") + std::to_string(parts[p]);
  }
  Edges e;
  for (std::size_t p = 0; p < parts.size(); ++p)
    for (std::size_t q = p + 1; q < parts.size(); ++q)
      for (int i = 0; i < parts[p]; ++i)
        for (int j = 0; j < parts[q]; ++j)
          e.emplace_back(offset[p] + i, offset[q] + j);
  return Graph(n, e, name);
}

Graph complete_minus_edge(int n) {
  require(n >= 2, "complete minus edge requires n >= 2");
  Edges e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!(i == 0 && j == 1)) e.emplace_back(i, j);
  return Graph(n, e, "K" + std::to_string(n) + "-e");
}

Graph complete_minus_perfect_matching(int n) {
  require(n >= 2 && n % 2 == 0,
          "complete minus perfect matching requires even n >= 2");
  Edges e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!(j == i + 1 && i % 2 == 0)) e.emplace_back(i, j);
  return Graph(n, e, "K" + std::to_string(n) + "-M");
}

Graph wheel(int n) {
  require(n >= 5, "wheel requires total order n >= 5");
  Edges e;
  const int rim = n - 1;
  for (int i = 0; i < rim; ++i) {
    e.emplace_back(i, (i + 1) % rim);
    e.emplace_back(i, rim);
  }
  return Graph(n, e, "W" + std::to_string(n));
}

Graph fan(int n) {
  require(n >= 1, "fan requires path length n >= 1");
  Edges e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  for (int i = 0; i < n; ++i) e.emplace_back(i, n);
  return Graph(n + 1, e, "fan(" + std::to_string(n) + ")");
}

Graph friendship(int n) {
  require(n >= 1, "friendship requires n >= 1 triangles");
  Edges e;
  const int center = 2 * n;
  for (int i = 0; i < n; ++i) {
    e.emplace_back(2 * i, 2 * i + 1);
    e.emplace_back(2 * i, center);
    e.emplace_back(2 * i + 1, center);
  }
  return Graph(2 * n + 1, e, "friendship(" + std::to_string(n) + ")");
}

Graph c_gadget(int n) {
  require(n >= 1, "c_gadget requires n >= 1");
  const int cyc = 4 * n;
  Edges e;
  for (int i = 0; i < cyc; ++i) e.emplace_back(i, (i + 1) % cyc);
  e.emplace_back(cyc, 0);
  e.emplace_back(cyc + 1, 2 * n);
  return Graph(cyc + 2, e, "c_gadget(" + std::to_string(n) + ")");
}

Graph grid(int p, int q) {
  require(p >= 1 && q >= 1, "grid requires p, q >= 1");
  Edges e;
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < q; ++j) {
      if (j + 1 < q) e.emplace_back(i * q + j, i * q + j + 1);
      if (i + 1 < p) e.emplace_back(i * q + j, (i + 1) * q + j);
    }
  return Graph(p * q, e,
               "grid(" + std::to_string(p) + "," + std::to_string(q) + ")");
}

Graph hamming(int n, int k) {
  require(n >= 1 && k >= 2, "hamming requires n >= 1 and k >= 2");
  long long order = 1;
  for (int i = 0; i < n; ++i) {
    order *= k;
    check_cap(order, "hamming");
  }
  const int total = static_cast<int>(order);
  // Index of a word is its big-endian base-k value; flipping letter at
  // position p changes the index by (new-old)*k^(n-1-p).
  std::vector<long long> weight(n, 1);
  for (int p = n - 2; p >= 0; --p) weight[p] = weight[p + 1] * k;
  Edges e;
  for (int v = 0; v < total; ++v)
    for (int p = 0; p < n; ++p) {
      const int letter = static_cast<int>(v / weight[p]) % k;
      for (int other = letter + 1; other < k; ++other)
        e.emplace_back(v, v + static_cast<int>((other - letter) * weight[p]));
    }
  return Graph(total, e,
               "H(" + std::to_string(n) + "," + std::to_string(k) + ")");
}

Graph johnson(int n, int k) {
  require(1 <= k && k < n, "johnson requires 1 <= k < n");
  // Reject oversized orders before enumerating C(n,k) subsets.
  long long count = 1;
  for (int i = 1; i <= k; ++i) {
    count = count * (n - k + i) / i;
    check_cap(count, "johnson");
  }
  std::vector<std::vector<int>> subsets;
  std::vector<int> current;
  // Lexicographic k-subset enumeration.
  std::function<void(int)> build = [&](int from) {
    if (static_cast<int>(current.size()) == k) {
      subsets.push_back(current);
      return;
    }
    for (int v = from; v < n; ++v) {
      current.push_back(v);
      build(v + 1);
      current.pop_back();
    }
  };
  build(0);
  check_cap(static_cast<long long>(subsets.size()), "johnson");
  Edges e;
  for (std::size_t a = 0; a < subsets.size(); ++a)
    for (std::size_t b = a + 1; b < subsets.size(); ++b) {
      std::vector<int> meet;
      std::set_intersection(subsets[a].begin(), subsets[a].end(),
                            subsets[b].begin(), subsets[b].end(),
                            std::back_inserter(meet));
      if (static_cast<int>(meet.size()) == k - 1)
        e.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
  return Graph(static_cast<int>(subsets.size()), e,
               "J(" + std::to_string(n) + "," + std::to_string(k) + ")");
}

namespace {

std::string operand_name(const Graph& g) {
  return g.name().empty() ? "G" + std::to_string(g.order()) : g.name();
}

} // namespace

Graph join(const Graph& g, const Graph& h) {
  const int m = g.order();
  Edges e = g.edges();
  for (const auto& [u, v] : h.edges()) e.emplace_back(m + u, m + v);
  for (int u = 0; u < m; ++u)
    for (int v = 0; v < h.order(); ++v) e.emplace_back(u, m + v);
  return Graph(m + h.order(), e,
               "join(" + operand_name(g) + "," + operand_name(h) + ")");
}

Graph corona(const Graph& g, const Graph& h) {
  const int m = g.order();
  const int n = h.order();
  check_cap(static_cast<long long>(m) + static_cast<long long>(m) * n,
            "corona");
  Edges e = g.edges();
  for (int i = 0; i < m; ++i) {
    const int base = m + i * n;
    for (const auto& [u, v] : h.edges()) e.emplace_back(base + u, base + v);
    for (int u = 0; u < n; ++u) e.emplace_back(i, base + u);
  }
  return Graph(m + m * n, e,
               "corona(" + operand_name(g) + "," + operand_name(h) + ")");
}

Graph composition(const Graph& g, const Graph& h) {
  if (!is_connected(g))
    throw std::invalid_argument(
        "composition requires a connected left factor; a disconnected one "
        "splits into the disjoint union of per-component compositions");
  const int m = g.order();
  const int n = h.order();
  check_cap(static_cast<long long>(m) * n, "composition");
  Edges e;
  for (const auto& [u, x] : g.edges())
    for (int v = 0; v < n; ++v)
      for (int y = 0; y < n; ++y) e.emplace_back(u * n + v, x * n + y);
  for (int u = 0; u < m; ++u)
    for (const auto& [v, y] : h.edges())
      e.emplace_back(u * n + v, u * n + y);
  return Graph(m * n, e,
               "comp(" + operand_name(g) + "," + operand_name(h) + ")");
}

Graph generalized_lexicographic(const GeneralizedLexicoSpec& spec) {
  const int m = spec.base.order();
  require(static_cast<int>(spec.fibers.size()) == m,
          "one fiber spec is required per base vertex");
  long long total = 0;
  std::vector<int> offset(m);
  for (int v = 0; v < m; ++v) {
    require(spec.fibers[v].size >= 1, "fiber sizes must be >= 1");
    offset[v] = static_cast<int>(total);
    total += spec.fibers[v].size;
  }
  check_cap(total, "generalized lexicographic product");
  Edges e;
  for (int v = 0; v < m; ++v)
    if (spec.fibers[v].complete)
      for (int i = 0; i < spec.fibers[v].size; ++i)
        for (int j = i + 1; j < spec.fibers[v].size; ++j)
          e.emplace_back(offset[v] + i, offset[v] + j);
  for (const auto& [u, v] : spec.base.edges())
    for (int i = 0; i < spec.fibers[u].size; ++i)
      for (int j = 0; j < spec.fibers[v].size; ++j)
        e.emplace_back(offset[u] + i, offset[v] + j);
  return Graph(static_cast<int>(total), e,
               "genlex(" + operand_name(spec.base) + ")");
}

Graph double_graph(const Graph& h) {
  Edges e;
  for (const auto& [u, v] : h.edges()) {
    e.emplace_back(2 * u, 2 * v);
    e.emplace_back(2 * u, 2 * v + 1);
    e.emplace_back(2 * u + 1, 2 * v);
    e.emplace_back(2 * u + 1, 2 * v + 1);
  }
  return Graph(2 * h.order(), e, "double(" + operand_name(h) + ")");
}

Graph tree_with_fixf(int n, int k) {
  require((k == n - 1 && n >= 2) || (2 <= k && k <= n - 3),
          "tree_with_fixf requires 2 <= k <= n-3 or k = n-1 (the star); "
          "k = n-2 has no tree of this shape attaining k/2");
  Edges e;
  const int path_len = n - k;  // path 0..path_len-1, leaves hang off the end
  for (int i = 0; i + 1 < path_len; ++i) e.emplace_back(i, i + 1);
  for (int leaf = path_len; leaf < n; ++leaf)
    e.emplace_back(path_len - 1, leaf);
  return Graph(n, e,
               "tree(" + std::to_string(n) + "," + std::to_string(k) + ")");
}

Graph spider(int m, int k) {
  require(m >= 1 && k >= 2, "spider requires m >= 1 and k >= 2");
  Edges e;
  int next = 1;
  for (int leg = 0; leg < k; ++leg) {
    int prev = 0;
    for (int step = 0; step < m + leg; ++step) {
      e.emplace_back(prev, next);
      prev = next++;
    }
  }
  return Graph(next, e,
               "spider(" + std::to_string(m) + "," + std::to_string(k) + ")");
}

Graph erdos_renyi(int n, std::uint32_t seed) {
  require(n >= 1, "erdos_renyi requires n >= 1");
  std::mt19937 rng(seed);
  Edges e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng() & 1u) e.emplace_back(u, v);
  return Graph(n, e,
               "gnp(" + std::to_string(n) + "," + std::to_string(seed) + ")");
}

Graph random_tree(int n, std::uint32_t seed) {
  require(n >= 1, "random_tree requires n >= 1");
  std::mt19937 rng(seed);
  Edges e;
  for (int v = 1; v < n; ++v)
    e.emplace_back(static_cast<int>(rng() % static_cast<std::uint32_t>(v)), v);
  return Graph(n, e,
               "rtree(" + std::to_string(n) + "," + std::to_string(seed) +
                   ")");
}

} // namespace fixnum
