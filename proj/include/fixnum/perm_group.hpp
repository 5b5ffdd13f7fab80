#pragma once

#include "fixnum/perm.hpp"
#include "fixnum/rational.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace fixnum {

// Stabilizer chain with explicit transversals (Schreier–Sims).  Level k
// holds the generators that fix base[0..k-1] pointwise together with the
// orbit and transversal of base[k] under them; the chain is closed, so the
// group order is the product of the orbit sizes and membership is decided
// exactly by sifting.
class StabChain {
public:
  // Builds a closed chain for <generators>.  base_prefix prescribes the
  // first base points (kept even when redundant); the base is extended
  // automatically while some generator fixes all of it.
  StabChain(int degree, const std::vector<Perm>& generators,
            const std::vector<int>& base_prefix = {});

  int degree() const { return degree_; }
  int levels() const { return static_cast<int>(levels_.size()); }
  std::vector<int> base() const;
  const std::vector<Perm>& level_generators(int level) const;
  BigInt suffix_order(int level) const;
  BigInt order() const { return suffix_order(0); }

  // Membership in the suffix group at `level` (the stabilizer of
  // base[0..level-1]); level 0 is the whole group.
  bool suffix_contains(const Perm& g, int level) const;
  bool contains(const Perm& g) const { return suffix_contains(g, 0); }

  // Adds a group element and re-closes the chain; returns false if g was
  // already a member.
  bool add_generator(const Perm& g);

  // Orbit of v under the level's generators, sorted ascending.
  std::vector<int> orbit(int level, int v) const;
  // Per-vertex orbit ids at a level; ids count up in order of each orbit's
  // smallest vertex.
  std::vector<int> orbit_ids(int level) const;

  // Streams every element of the suffix group at `level` exactly once.
  // Throws cap_exceeded when the suffix order exceeds budget.
  void for_each_suffix_element(int level, std::uint64_t budget,
                               const std::function<void(const Perm&)>& fn) const;

private:
  struct Level {
    int point;
    std::vector<Perm> gens;
    std::vector<int> orbit;  // discovery order; orbit[0] == point
    std::vector<int> slot;   // slot[v] = index into orbit, or -1
    std::vector<Perm> rep;   // rep[i] maps point to orbit[i]
  };

  void distribute(const Perm& g);
  void rebuild_transversal(int level);
  // Sifts g through levels start.. and returns the residue plus the level
  // at which sifting stopped (levels() when it ran through all of them).
  std::pair<Perm, int> sift(Perm g, int start) const;
  int verify_level(int i);
  void close();

  int degree_;
  std::vector<Level> levels_;
};

// Immutable permutation group handle: a shared stabilizer chain plus a view
// level, so stabilizers are groups in their own right without copying.
class PermGroup {
public:
  static PermGroup from_generators(int degree, const std::vector<Perm>& gens);
  static PermGroup trivial(int degree);
  static PermGroup adopt(std::shared_ptr<const StabChain> chain);

  int degree() const;
  BigInt order() const;
  bool is_trivial() const { return order() == 1; }

  // Strong generating set (empty for the trivial group).
  const std::vector<Perm>& generators() const;
  std::vector<int> base() const;
  bool contains(const Perm& g) const;

  std::vector<int> orbit(int v) const;
  std::vector<std::vector<int>> orbits() const;
  std::vector<int> orbit_ids() const;
  bool is_transitive() const;

  PermGroup point_stabilizer(int x) const;
  PermGroup pointwise_stabilizer(const std::vector<int>& points) const;

  // All elements (throws cap_exceeded when order() > budget); prefer
  // for_each_element for large groups.
  std::vector<Perm> elements(std::uint64_t budget) const;
  void for_each_element(std::uint64_t budget,
                        const std::function<void(const Perm&)>& fn) const;

private:
  PermGroup(std::shared_ptr<const StabChain> chain, int view);

  std::shared_ptr<const StabChain> chain_;
  int view_;
};

// Serializes as {"generators":[[images],...],"order":"<decimal>"}.
std::string group_to_json(const PermGroup& g);

} // namespace fixnum
