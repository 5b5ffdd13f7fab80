#include "fixnum/autgroup.hpp"

#include "fixnum/errors.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <optional>
#include <string>

namespace fixnum {

namespace {

// Ordered partition of 0..n-1: `elems` lists the vertices, cells are
// contiguous runs.  clen[s] is the cell length when s is a cell start;
// cstart[p] maps a position to the start of its cell.
struct OrderedPartition {
  std::vector<int> elems;
  std::vector<int> pos;
  std::vector<int> cstart;
  std::vector<int> clen;

  static OrderedPartition unit(int n) {
    OrderedPartition p;
    p.elems.resize(n);
    p.pos.resize(n);
    for (int v = 0; v < n; ++v) p.elems[v] = p.pos[v] = v;
    p.cstart.assign(n, 0);
    p.clen.assign(n, 0);
    p.clen[0] = n;
    return p;
  }

  int order() const { return static_cast<int>(elems.size()); }

  bool discrete() const {
    for (int s = 0; s < order(); ++s)
      if (clen[s] != 1) return false;
    return true;
  }

  // Cell sizes in positional order; equal vectors imply identical cell
  // boundaries, which the search relies on to transfer cell starts between
  // nodes with matching traces.
  std::vector<int> sizes() const {
    std::vector<int> out;
    for (int s = 0; s < order(); s += clen[s]) out.push_back(clen[s]);
    return out;
  }

  std::vector<int> cell_vertices(int s) const {
    std::vector<int> out(elems.begin() + s, elems.begin() + s + clen[s]);
    std::sort(out.begin(), out.end());
    return out;
  }
};

// Refines toward the coarsest equitable partition, seeded by the given
// splitter cell starts.  Splitting orders fragments by neighbor count, so
// the process is equivariant: it commutes with any automorphism of g.
void refine(const Graph& g, OrderedPartition& p,
            std::vector<int> queue) {
  const int n = p.order();
  std::vector<char> in_queue(n, 0);
  for (int s : queue) in_queue[s] = 1;
  std::vector<int> cnt(n, 0);
  std::vector<int> touched;       // vertices with nonzero count
  std::vector<int> cells;         // cell starts needing a split check
  std::vector<std::pair<int, int>> scratch; // (count, vertex)

  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int s = queue[head];
    in_queue[s] = 0;
    touched.clear();
    cells.clear();
    for (int i = s; i < s + p.clen[s]; ++i)
      for (int w : g.neighbors(p.elems[i])) {
        if (cnt[w]++ == 0) touched.push_back(w);
      }
    for (int w : touched) {
      const int c = p.cstart[p.pos[w]];
      if (p.clen[c] > 1 &&
          std::find(cells.begin(), cells.end(), c) == cells.end())
        cells.push_back(c);
    }
    std::sort(cells.begin(), cells.end());
    for (int c : cells) {
      const int len = p.clen[c];
      scratch.clear();
      bool uniform = true;
      for (int i = c; i < c + len; ++i) {
        scratch.emplace_back(cnt[p.elems[i]], p.elems[i]);
        if (scratch.back().first != scratch.front().first) uniform = false;
      }
      if (uniform) continue;
      // Fragment order is by count only; ties keep their relative order,
      // which stays label-free because it is inherited from the cell.
      std::stable_sort(scratch.begin(), scratch.end(),
                       [](const auto& a, const auto& b) {
                         return a.first < b.first;
                       });
      int start = c;
      for (int i = 0; i < len; ++i) {
        const int v = scratch[i].second;
        p.elems[c + i] = v;
        p.pos[v] = c + i;
        if (i > 0 && scratch[i].first != scratch[i - 1].first) start = c + i;
        p.cstart[c + i] = start;
        if (c + i == start) p.clen[start] = 0;
        ++p.clen[start];
      }
      for (int i = c; i < c + len; i += p.clen[i])
        if (!in_queue[i]) {
          in_queue[i] = 1;
          queue.push_back(i);
        }
    }
    for (int w : touched) cnt[w] = 0;
  }
}

// Splits vertex u off the front of its cell and refines.
OrderedPartition individualize(const Graph& g, const OrderedPartition& base,
                               int u) {
  OrderedPartition p = base;
  const int s = p.cstart[p.pos[u]];
  const int len = p.clen[s];
  const int pu = p.pos[u];
  std::swap(p.elems[s], p.elems[pu]);
  p.pos[p.elems[pu]] = pu;
  p.pos[u] = s;
  p.clen[s] = 1;
  if (len > 1) {
    p.clen[s + 1] = len - 1;
    for (int i = s + 1; i < s + len; ++i) p.cstart[i] = s + 1;
    refine(g, p, {s, s + 1});
  } else {
    refine(g, p, {s});
  }
  return p;
}

// First smallest cell of size >= 2 (positional order); -1 when discrete.
int select_target(const OrderedPartition& p) {
  int best = -1;
  for (int s = 0; s < p.order(); s += p.clen[s])
    if (p.clen[s] >= 2 && (best < 0 || p.clen[s] < p.clen[best])) best = s;
  return best;
}

struct PathLevel {
  OrderedPartition partition;
  std::vector<int> sizes;
  int target = -1;               // target cell start at this depth
  int chosen = -1;               // vertex individualized on the leftmost path
  std::vector<int> candidates;   // target cell content, ascending
};

class AutSearch {
public:
  explicit AutSearch(const Graph& g) : g_(g) {}

  std::shared_ptr<StabChain> run() {
    const int n = g_.order();
    OrderedPartition root = OrderedPartition::unit(n);
    refine(g_, root, {0});
    // Leftmost path: repeatedly individualize the smallest vertex of the
    // target cell.  Its chosen vertices form a base: a discrete leaf pins
    // every vertex, so an automorphism fixing all of them is the identity.
    for (OrderedPartition p = std::move(root);;) {
      PathLevel lvl;
      lvl.sizes = p.sizes();
      lvl.target = select_target(p);
      lvl.partition = std::move(p);
      if (lvl.target < 0) {
        path_.push_back(std::move(lvl));
        break;
      }
      lvl.candidates = lvl.partition.cell_vertices(lvl.target);
      lvl.chosen = lvl.candidates.front();
      OrderedPartition next = individualize(g_, lvl.partition, lvl.chosen);
      path_.push_back(std::move(lvl));
      p = std::move(next);
    }
    const int depth = static_cast<int>(path_.size()) - 1;
    leaf_ = &path_.back().partition.elems;
    std::vector<int> base;
    for (int d = 0; d < depth; ++d) base.push_back(path_[d].chosen);
    chain_ = std::make_shared<StabChain>(n, std::vector<Perm>{}, base);

    // Process deviations bottom-up: deeper levels contribute the point
    // stabilizers orbit pruning needs higher up.
    for (int d = depth - 1; d >= 0; --d) {
      std::vector<char> processed(n, 0);
      processed[path_[d].chosen] = 1;
      for (int u : path_[d].candidates) {
        if (u == path_[d].chosen) continue;
        bool skip = false;
        for (int w : chain_->orbit(d, u))
          if (processed[w]) {
            skip = true;
            break;
          }
        if (!skip) {
          OrderedPartition child = individualize(g_, path_[d].partition, u);
          if (child.sizes() == path_[d + 1].sizes)
            if (auto h = descend(std::move(child), d + 1))
              chain_->add_generator(*h);
        }
        processed[u] = 1;
      }
    }
    return chain_;
  }

private:
  // Explores a deviated subtree at depth d, pruning branches whose
  // refinement trace differs from the leftmost path; returns the first
  // automorphism found.
  std::optional<Perm> descend(OrderedPartition p, int d) {
    if (d + 1 == static_cast<int>(path_.size())) {
      // Discrete leaf: positions align with the leftmost leaf.
      std::vector<int> img(g_.order());
      for (int i = 0; i < g_.order(); ++i) img[(*leaf_)[i]] = p.elems[i];
      Perm candidate{std::move(img)};
      if (preserves_adjacency(candidate, g_)) return candidate;
      return std::nullopt;
    }
    // Equal size traces mean equal cell boundaries, so the leftmost path's
    // target start addresses the corresponding cell here.
    for (int u : p.cell_vertices(path_[d].target)) {
      OrderedPartition child = individualize(g_, p, u);
      if (child.sizes() == path_[d + 1].sizes)
        if (auto h = descend(std::move(child), d + 1)) return h;
    }
    return std::nullopt;
  }

  const Graph& g_;
  std::vector<PathLevel> path_;
  const std::vector<int>* leaf_ = nullptr;
  std::shared_ptr<StabChain> chain_;
};

} // namespace

PermGroup automorphisms(const Graph& g) {
  AutSearch search(g);
  return PermGroup::adopt(search.run());
}

std::vector<Perm> brute_force_automorphisms(const Graph& g, int max_n,
                                            std::uint64_t budget) {
  const int n = g.order();
  if (n > max_n)
    throw cap_exceeded("brute-force automorphism search capped at n <= " +
                       std::to_string(max_n) + ", got n = " +
                       std::to_string(n));
  const DistanceMatrix d(g);
  // Automorphisms preserve each vertex's multiset of distances; bucket
  // vertices by that profile to cut the candidate lists.
  std::vector<std::vector<int>> profile(n);
  for (int v = 0; v < n; ++v) {
    profile[v].reserve(n);
    for (int w = 0; w < n; ++w) profile[v].push_back(d(v, w));
    std::sort(profile[v].begin(), profile[v].end());
  }
  std::vector<std::vector<int>> candidates(n);
  for (int v = 0; v < n; ++v)
    for (int w = 0; w < n; ++w)
      if (profile[v] == profile[w]) candidates[v].push_back(w);

  std::vector<Perm> out;
  std::vector<int> img(n, -1);
  std::vector<char> used(n, 0);
  std::function<void(int)> assign = [&](int v) {
    if (v == n) {
      out.emplace_back(img);
      if (out.size() > budget)
        throw cap_exceeded("brute-force automorphism list exceeds budget");
      return;
    }
    for (int w : candidates[v]) {
      if (used[w]) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) ok = d(u, v) == d(img[u], w);
      if (!ok) continue;
      img[v] = w;
      used[w] = 1;
      assign(v + 1);
      used[w] = 0;
      img[v] = -1;
    }
  };
  assign(0);
  return out;
}

std::vector<int> stabilizer_orbit(const PermGroup& aut, int x, int u) {
  return aut.point_stabilizer(x).orbit(u);
}

bool is_vertex_transitive(const PermGroup& aut) { return aut.is_transitive(); }

bool is_vertex_transitive(const Graph& g) {
  return is_vertex_transitive(automorphisms(g));
}

} // namespace fixnum
