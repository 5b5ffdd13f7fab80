#include "fixnum/perm_group.hpp"

#include "fixnum/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <stdexcept>

namespace fixnum {

// ---------------------------------------------------------------------------
// StabChain

StabChain::StabChain(int degree, const std::vector<Perm>& generators,
                     const std::vector<int>& base_prefix)
    : degree_(degree) {
  if (degree <= 0) throw std::invalid_argument("group degree must be positive");
  for (int b : base_prefix) {
    if (b < 0 || b >= degree)
      throw std::invalid_argument("base point out of range");
    if (std::any_of(levels_.begin(), levels_.end(),
                    [b](const Level& l) { return l.point == b; }))
      continue; // duplicate prescribed point adds nothing
    levels_.push_back(Level{b, {}, {}, {}, {}});
  }
  for (const Perm& g : generators) {
    if (g.degree() != degree)
      throw std::invalid_argument("generator degree mismatch");
    distribute(g);
  }
  for (int k = 0; k < levels(); ++k) rebuild_transversal(k);
  close();
}

std::vector<int> StabChain::base() const {
  std::vector<int> b;
  b.reserve(levels_.size());
  for (const Level& l : levels_) b.push_back(l.point);
  return b;
}

const std::vector<Perm>& StabChain::level_generators(int level) const {
  static const std::vector<Perm> none;
  if (level < 0 || level > levels())
    throw std::invalid_argument("level out of range");
  return level == levels() ? none : levels_[level].gens;
}

BigInt StabChain::suffix_order(int level) const {
  BigInt ord = 1;
  for (int k = level; k < levels(); ++k) ord *= levels_[k].orbit.size();
  return ord;
}

void StabChain::distribute(const Perm& g) {
  if (g.is_identity()) return;
  // g belongs to every level whose base prefix it fixes; extend the base if
  // it fixes all current base points.
  for (int k = 0;; ++k) {
    if (k == levels()) {
      int moved = 0;
      while (g(moved) == moved) ++moved;
      levels_.push_back(Level{moved, {}, {}, {}, {}});
    }
    Level& lvl = levels_[k];
    if (std::find(lvl.gens.begin(), lvl.gens.end(), g) == lvl.gens.end())
      lvl.gens.push_back(g);
    if (g(lvl.point) != lvl.point) break;
  }
}

void StabChain::rebuild_transversal(int level) {
  Level& lvl = levels_[level];
  lvl.orbit.assign(1, lvl.point);
  lvl.slot.assign(degree_, -1);
  lvl.slot[lvl.point] = 0;
  lvl.rep.assign(1, Perm::identity(degree_));
  for (std::size_t head = 0; head < lvl.orbit.size(); ++head) {
    const int x = lvl.orbit[head];
    for (const Perm& s : lvl.gens) {
      const int y = s(x);
      if (lvl.slot[y] < 0) {
        lvl.slot[y] = static_cast<int>(lvl.orbit.size());
        lvl.orbit.push_back(y);
        lvl.rep.push_back(s * lvl.rep[head]);
      }
    }
  }
}

std::pair<Perm, int> StabChain::sift(Perm g, int start) const {
  for (int k = start; k < levels(); ++k) {
    const Level& lvl = levels_[k];
    const int image = g(lvl.point);
    const int i = lvl.slot[image];
    if (i < 0) return {std::move(g), k};
    g = lvl.rep[i].inverse() * g;
  }
  return {std::move(g), levels()};
}

bool StabChain::suffix_contains(const Perm& g, int level) const {
  if (g.degree() != degree_) return false;
  for (int k = 0; k < level; ++k)
    if (g(levels_[k].point) != levels_[k].point) return false;
  auto [residue, stop] = sift(g, level);
  return stop == levels() && residue.is_identity();
}

bool StabChain::add_generator(const Perm& g) {
  if (g.degree() != degree_)
    throw std::invalid_argument("generator degree mismatch");
  if (contains(g)) return false;
  const int before = levels();
  distribute(g);
  for (int k = 0; k < levels(); ++k)
    if (k >= before || !levels_[k].gens.empty()) rebuild_transversal(k);
  close();
  return true;
}

int StabChain::verify_level(int i) {
  // Checks the Schreier–Sims condition at level i: every Schreier generator
  // of the point stabilizer must sift to the identity through the deeper
  // levels.  On the first failure the residue is registered as a missing
  // strong generator and the level to resume from is returned; -1 means the
  // level is complete.  All mutation happens after the last use of any
  // reference into levels_, which push_back may otherwise invalidate.
  const std::size_t orbit_size = levels_[i].orbit.size();
  const std::size_t gen_count = levels_[i].gens.size();
  for (std::size_t oi = 0; oi < orbit_size; ++oi) {
    for (std::size_t si = 0; si < gen_count; ++si) {
      const Level& lvl = levels_[i];
      const Perm& s = lvl.gens[si];
      const int x = lvl.orbit[oi];
      const Perm schreier =
          lvl.rep[lvl.slot[s(x)]].inverse() * (s * lvl.rep[oi]);
      if (schreier.is_identity()) continue;
      auto [residue, stop] = sift(schreier, i + 1);
      if (stop == levels() && residue.is_identity()) continue;
      if (stop == levels()) {
        // Residue fixes every base point but is not the identity: the base
        // must grow by a point it moves.
        int moved = 0;
        while (residue(moved) == moved) ++moved;
        levels_.push_back(Level{moved, {}, {}, {}, {}});
      }
      // The residue fixes base[0..stop-1], so it belongs to the generator
      // lists of levels i+1..stop (at levels <= i it is already generated).
      for (int k = i + 1; k <= stop && k < levels(); ++k) {
        Level& deeper = levels_[k];
        if (std::find(deeper.gens.begin(), deeper.gens.end(), residue) ==
            deeper.gens.end())
          deeper.gens.push_back(residue);
        rebuild_transversal(k);
      }
      return std::min(stop, levels() - 1);
    }
  }
  return -1;
}

void StabChain::close() {
  int i = levels() - 1;
  while (i >= 0) {
    const int resume = verify_level(i);
    i = resume < 0 ? i - 1 : resume;
  }
}

std::vector<int> StabChain::orbit(int level, int v) const {
  if (v < 0 || v >= degree_) throw std::invalid_argument("vertex out of range");
  const auto& gens = level_generators(level);
  std::vector<int> out{v};
  std::vector<char> seen(degree_, 0);
  seen[v] = 1;
  for (std::size_t head = 0; head < out.size(); ++head)
    for (const Perm& s : gens) {
      const int y = s(out[head]);
      if (!seen[y]) {
        seen[y] = 1;
        out.push_back(y);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> StabChain::orbit_ids(int level) const {
  const auto& gens = level_generators(level);
  std::vector<int> id(degree_, -1);
  int next = 0;
  std::vector<int> queue;
  for (int v = 0; v < degree_; ++v) {
    if (id[v] >= 0) continue;
    const int my = next++;
    id[v] = my;
    queue.assign(1, v);
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (const Perm& s : gens) {
        const int y = s(queue[head]);
        if (id[y] < 0) {
          id[y] = my;
          queue.push_back(y);
        }
      }
  }
  return id;
}

void StabChain::for_each_suffix_element(
    int level, std::uint64_t budget,
    const std::function<void(const Perm&)>& fn) const {
  if (suffix_order(level) > budget)
    throw cap_exceeded("group order " + suffix_order(level).str() +
                       " exceeds element enumeration budget " +
                       std::to_string(budget));
  // Every element factors uniquely as rep[level] * rep[level+1] * ...
  std::function<void(int, const Perm&)> walk = [&](int k, const Perm& acc) {
    if (k == levels()) {
      fn(acc);
      return;
    }
    for (const Perm& u : levels_[k].rep) walk(k + 1, acc * u);
  };
  walk(level, Perm::identity(degree_));
}

// ---------------------------------------------------------------------------
// PermGroup

PermGroup::PermGroup(std::shared_ptr<const StabChain> chain, int view)
    : chain_(std::move(chain)), view_(view) {}

PermGroup PermGroup::from_generators(int degree,
                                     const std::vector<Perm>& gens) {
  return PermGroup(std::make_shared<const StabChain>(degree, gens), 0);
}

PermGroup PermGroup::trivial(int degree) {
  return from_generators(degree, {});
}

PermGroup PermGroup::adopt(std::shared_ptr<const StabChain> chain) {
  return PermGroup(std::move(chain), 0);
}

int PermGroup::degree() const { return chain_->degree(); }

BigInt PermGroup::order() const { return chain_->suffix_order(view_); }

const std::vector<Perm>& PermGroup::generators() const {
  return chain_->level_generators(view_);
}

std::vector<int> PermGroup::base() const {
  const auto full = chain_->base();
  return std::vector<int>(full.begin() + view_, full.end());
}

bool PermGroup::contains(const Perm& g) const {
  return chain_->suffix_contains(g, view_);
}

std::vector<int> PermGroup::orbit(int v) const {
  return chain_->orbit(view_, v);
}

std::vector<int> PermGroup::orbit_ids() const {
  return chain_->orbit_ids(view_);
}

std::vector<std::vector<int>> PermGroup::orbits() const {
  const auto ids = orbit_ids();
  const int classes = ids.empty() ? 0 : *std::max_element(ids.begin(), ids.end()) + 1;
  std::vector<std::vector<int>> out(classes);
  for (int v = 0; v < degree(); ++v) out[ids[v]].push_back(v);
  return out;
}

bool PermGroup::is_transitive() const {
  return static_cast<int>(orbit(0).size()) == degree();
}

PermGroup PermGroup::point_stabilizer(int x) const {
  if (x < 0 || x >= degree()) throw std::invalid_argument("vertex out of range");
  auto chain = std::make_shared<const StabChain>(degree(), generators(),
                                                 std::vector<int>{x});
  return PermGroup(std::move(chain), 1);
}

PermGroup PermGroup::pointwise_stabilizer(const std::vector<int>& points) const {
  std::vector<int> prefix;
  for (int x : points) {
    if (x < 0 || x >= degree())
      throw std::invalid_argument("vertex out of range");
    if (std::find(prefix.begin(), prefix.end(), x) == prefix.end())
      prefix.push_back(x);
  }
  auto chain =
      std::make_shared<const StabChain>(degree(), generators(), prefix);
  return PermGroup(std::move(chain), static_cast<int>(prefix.size()));
}

std::vector<Perm> PermGroup::elements(std::uint64_t budget) const {
  std::vector<Perm> out;
  for_each_element(budget, [&out](const Perm& p) { out.push_back(p); });
  return out;
}

void PermGroup::for_each_element(
    std::uint64_t budget, const std::function<void(const Perm&)>& fn) const {
  chain_->for_each_suffix_element(view_, budget, fn);
}

std::string group_to_json(const PermGroup& g) {
  nlohmann::json j;
  j["order"] = g.order().str();
  j["generators"] = nlohmann::json::array();
  for (const Perm& p : g.generators()) j["generators"].push_back(p.images());
  return j.dump();
}

} // namespace fixnum
