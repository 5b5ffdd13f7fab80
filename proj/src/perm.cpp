#include "fixnum/perm.hpp"

#include "fixnum/graph.hpp"

#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace fixnum {

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
  const int n = degree();
  if (n == 0) throw std::invalid_argument("permutation degree must be positive");
  std::vector<char> seen(n, 0);
  for (int v : img_) {
    if (v < 0 || v >= n || seen[v])
      throw std::invalid_argument("image table is not a permutation of 0.." +
                                  std::to_string(n - 1));
    seen[v] = 1;
  }
}

Perm Perm::identity(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  return Perm(std::move(img));
}

Perm Perm::transposition(int n, int u, int v) {
  Perm p = identity(n);
  if (u == v) throw std::invalid_argument("transposition requires u != v");
  std::swap(p.img_[u], p.img_[v]);
  return p;
}

bool Perm::is_identity() const {
  for (int v = 0; v < degree(); ++v)
    if (img_[v] != v) return false;
  return true;
}

Perm Perm::inverse() const {
  std::vector<int> inv(degree());
  for (int v = 0; v < degree(); ++v) inv[img_[v]] = v;
  return Perm(std::move(inv));
}

Perm operator*(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree())
    throw std::invalid_argument("cannot compose permutations of different degree");
  std::vector<int> img(a.degree());
  for (int v = 0; v < a.degree(); ++v) img[v] = a.img_[b.img_[v]];
  return Perm(std::move(img));
}

bool preserves_adjacency(const Perm& p, const Graph& g) {
  if (p.degree() != g.order()) return false;
  for (int u = 0; u < g.order(); ++u) {
    const int pu = p(u);
    if (g.degree(u) != g.degree(pu)) return false;
    for (int v : g.neighbors(u))
      if (u < v && !g.adjacent(pu, p(v))) return false;
  }
  return true;
}

} // namespace fixnum
