#include "fixnum/errors.hpp"
#include "fixnum/perm.hpp"
#include "fixnum/perm_group.hpp"

#include <json.hpp>

#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

using namespace fixnum;

namespace {

Perm cycle_shift(int n) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = (i + 1) % n;
  return Perm(std::move(img));
}

Perm reflection(int n) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = (n - i) % n;
  return Perm(std::move(img));
}

}  // namespace

TEST_CASE("permutations compose, invert and validate") {
  Perm id = Perm::identity(4);
  CHECK(id.is_identity());
  Perm t = Perm::transposition(4, 1, 3);
  CHECK(t(1) == 3);
  CHECK(t(3) == 1);
  CHECK(t(0) == 0);
  CHECK((t * t).is_identity());
  Perm r = cycle_shift(4);
  CHECK((r * r.inverse()).is_identity());
  // (a*b)(x) = a(b(x))
  CHECK((r * t)(1) == r(t(1)));
  CHECK_THROWS_AS(Perm({0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Perm({0, 3}), std::invalid_argument);
}

TEST_CASE("stabilizer chain reproduces the dihedral group of the hexagon") {
  PermGroup d6 = PermGroup::from_generators(6, {cycle_shift(6), reflection(6)});
  CHECK(d6.order() == 12);
  CHECK(d6.is_transitive());
  CHECK(d6.orbit(0) == std::vector<int>{0, 1, 2, 3, 4, 5});
  CHECK(d6.contains(cycle_shift(6)));
  CHECK(d6.contains(cycle_shift(6).inverse()));
  CHECK_FALSE(d6.contains(Perm::transposition(6, 0, 1)));
}

TEST_CASE("stabilizer chain reproduces the symmetric group on four points") {
  PermGroup s4 =
      PermGroup::from_generators(4, {cycle_shift(4), Perm::transposition(4, 0, 1)});
  CHECK(s4.order() == 24);
  auto elems = s4.elements(100);
  CHECK(elems.size() == 24);
  std::set<Perm> distinct(elems.begin(), elems.end());
  CHECK(distinct.size() == 24);
  for (const auto& p : elems) CHECK(s4.contains(p));
}

TEST_CASE("point stabilizers have the right order and orbits") {
  PermGroup d6 = PermGroup::from_generators(6, {cycle_shift(6), reflection(6)});
  PermGroup stab0 = d6.point_stabilizer(0);
  CHECK(stab0.order() == 2);  // identity and the mirror through vertex 0
  CHECK(stab0.orbit(1) == std::vector<int>{1, 5});
  CHECK(stab0.orbit(3) == std::vector<int>{3});
  for (const auto& p : stab0.elements(10)) CHECK(p(0) == 0);

  PermGroup stab01 = d6.pointwise_stabilizer({0, 1});
  CHECK(stab01.is_trivial());
  CHECK(stab01.generators().empty());
}

TEST_CASE("orbit ids number orbits by smallest element") {
  // <(0 1), (2 3 4)> on 5 points: orbits {0,1}, {2,3,4}.
  PermGroup g = PermGroup::from_generators(
      5, {Perm::transposition(5, 0, 1), Perm({0, 1, 3, 4, 2})});
  CHECK(g.order() == 6);
  CHECK_FALSE(g.is_transitive());
  CHECK(g.orbit_ids() == std::vector<int>{0, 0, 1, 1, 1});
  CHECK(g.orbits() == std::vector<std::vector<int>>{{0, 1}, {2, 3, 4}});
}

TEST_CASE("trivial group behaves") {
  PermGroup t = PermGroup::trivial(5);
  CHECK(t.order() == 1);
  CHECK(t.is_trivial());
  CHECK(t.orbits().size() == 5);
  CHECK(t.elements(1).size() == 1);
  CHECK(t.elements(1)[0].is_identity());
}

TEST_CASE("element enumeration enforces its budget") {
  PermGroup s4 =
      PermGroup::from_generators(4, {cycle_shift(4), Perm::transposition(4, 0, 1)});
  CHECK_THROWS_AS(s4.elements(23), cap_exceeded);
  int count = 0;
  s4.for_each_element(24, [&](const Perm&) { ++count; });
  CHECK(count == 24);
}

TEST_CASE("membership agrees with exhaustive enumeration") {
  // <(0 1 2 3 4)> is cyclic of order 5 inside S5.
  PermGroup c5 = PermGroup::from_generators(5, {cycle_shift(5)});
  CHECK(c5.order() == 5);
  auto members = c5.elements(5);
  std::set<Perm> in(members.begin(), members.end());
  // Check a sample of S5 elements against the member set.
  PermGroup s5 =
      PermGroup::from_generators(5, {cycle_shift(5), Perm::transposition(5, 0, 1)});
  CHECK(s5.order() == 120);
  for (const auto& p : s5.elements(120))
    CHECK(c5.contains(p) == (in.count(p) > 0));
}

TEST_CASE("stabilizer chain exposes base and levels") {
  StabChain chain(4, {cycle_shift(4), Perm::transposition(4, 0, 1)});
  CHECK(chain.order() == 24);
  auto base = chain.base();
  CHECK(base.size() == static_cast<std::size_t>(chain.levels()));
  // Suffix orders divide on the way down and end at 1.
  BigInt prev = chain.order();
  for (int lvl = 1; lvl <= chain.levels(); ++lvl) {
    BigInt cur = lvl < chain.levels() ? chain.suffix_order(lvl) : BigInt(1);
    CHECK(prev % cur == 0);
    prev = cur;
  }
  CHECK(prev == 1);
  // A prescribed base prefix is honored.
  StabChain pinned(4, {cycle_shift(4), Perm::transposition(4, 0, 1)}, {3, 2});
  CHECK(pinned.order() == 24);
  auto pb = pinned.base();
  REQUIRE(pb.size() >= 2);
  CHECK(pb[0] == 3);
  CHECK(pb[1] == 2);
}

TEST_CASE("group serialization carries generators and order") {
  PermGroup d6 = PermGroup::from_generators(6, {cycle_shift(6), reflection(6)});
  auto j = nlohmann::json::parse(group_to_json(d6));
  REQUIRE(j.contains("generators"));
  REQUIRE(j.contains("order"));
  CHECK(j["order"].get<std::string>() == "12");
  for (const auto& images : j["generators"]) {
    std::vector<int> img = images.get<std::vector<int>>();
    CHECK(d6.contains(Perm(img)));
  }
}
