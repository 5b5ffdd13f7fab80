#pragma once

#include <vector>

namespace fixnum {

class Graph;

// Permutation of {0,..,n-1}, stored as the image table.
class Perm {
public:
  explicit Perm(std::vector<int> images);
  static Perm identity(int n);
  static Perm transposition(int n, int u, int v);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int v) const { return img_[v]; }
  const std::vector<int>& images() const { return img_; }

  bool is_identity() const;
  Perm inverse() const;

  // Composition acts left-to-first: (a*b)(x) = a(b(x)).
  friend Perm operator*(const Perm& a, const Perm& b);

  friend bool operator==(const Perm& a, const Perm& b) {
    return a.img_ == b.img_;
  }
  friend bool operator<(const Perm& a, const Perm& b) {
    return a.img_ < b.img_;
  }

private:
  std::vector<int> img_;
};

// True iff p maps edges to edges and non-edges to non-edges.
bool preserves_adjacency(const Perm& p, const Graph& g);

} // namespace fixnum
