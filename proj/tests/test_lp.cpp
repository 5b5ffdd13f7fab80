#include "fixnum/autgroup.hpp"
#include "fixnum/errors.hpp"
#include "fixnum/families.hpp"
#include "fixnum/fixing.hpp"
#include "fixnum/graph.hpp"
#include "fixnum/lp.hpp"
#include "fixnum/perm.hpp"
#include "fixnum/rational.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

using namespace fixnum;

namespace {

VertexSet row_of(int columns, const std::vector<int>& ones) {
  VertexSet r(columns);
  for (int v : ones) r.set(v);
  return r;
}

std::vector<std::vector<int>> row_lists(const CoverLp& lp) {
  std::vector<std::vector<int>> out;
  for (const auto& row : lp.rows) {
    std::vector<int> cols;
    for (int x = row.find_first(); x != static_cast<int>(VertexSet::npos);
         x = row.find_next(x))
      cols.push_back(x);
    out.push_back(std::move(cols));
  }
  return out;
}

CoverLp random_lp(int columns, int rows, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::vector<VertexSet> out;
  for (int i = 0; i < rows; ++i) {
    VertexSet row(columns);
    while (row.none())
      for (int c = 0; c < columns; ++c)
        if (rng() % 3 == 0) row.set(c);
    out.push_back(std::move(row));
  }
  return CoverLp::from_rows(columns, std::move(out));
}

Graph relabel(const Graph& g, const Perm& p) {
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(p(u), p(v));
  return Graph(g.order(), edges, g.name());
}

}  // namespace

TEST_CASE("solutions are feasible and match their value") {
  for (int i = 0; i < 30; ++i) {
    CoverLp lp = random_lp(2 + i % 5, 1 + i % 7, 8100 + static_cast<std::uint32_t>(i));
    LpSolution sol = solve_cover_lp(lp);
    Rational total = 0;
    for (const auto& w : sol.weights) {
      REQUIRE(w >= 0);
      REQUIRE(w <= 1);
      total += w;
    }
    REQUIRE(total == sol.value);
    for (const auto& row : lp.rows) {
      Rational s = 0;
      for (int x = row.find_first(); x != static_cast<int>(VertexSet::npos);
           x = row.find_next(x))
        s += sol.weights[x];
      REQUIRE(s >= 1);
    }
  }
}

TEST_CASE("optimum agrees with the vertex enumeration oracle") {
  for (int i = 0; i < 40; ++i) {
    CoverLp lp = random_lp(2 + i % 4, 1 + i % 6, 8400 + static_cast<std::uint32_t>(i));
    CHECK(solve_cover_lp(lp).value ==
          oracles::cover_lp_by_vertex_enumeration(lp.columns, row_lists(lp)));
  }
}

TEST_CASE("known optima of tiny covering programs") {
  // Two disjoint pairs force one unit each.
  CoverLp lp = CoverLp::from_rows(4, {row_of(4, {0, 2}), row_of(4, {1, 3})});
  CHECK(solve_cover_lp(lp).value == 2);
  // The all-pairs system on three columns has the half-integral optimum.
  CoverLp tri = CoverLp::from_rows(
      3, {row_of(3, {0, 1}), row_of(3, {0, 2}), row_of(3, {1, 2})});
  CHECK(solve_cover_lp(tri).value == Rational(3) / 2);
  // A single full row costs exactly one unit.
  CoverLp full = CoverLp::from_rows(5, {row_of(5, {0, 1, 2, 3, 4})});
  CHECK(solve_cover_lp(full).value == 1);
  // No rows: nothing to cover.
  CHECK(solve_cover_lp(CoverLp{3, {}}).value == 0);
}

TEST_CASE("row validation rejects malformed programs") {
  CHECK_THROWS_AS(CoverLp::from_rows(3, {VertexSet(3)}), std::invalid_argument);
  CHECK_THROWS_AS(CoverLp::from_rows(3, {VertexSet(2, 0b11)}),
                  std::invalid_argument);
}

TEST_CASE("adding rows never lowers the optimum and reduce preserves it") {
  for (int i = 0; i < 30; ++i) {
    CoverLp lp = random_lp(3 + i % 3, 2 + i % 6, 8700 + static_cast<std::uint32_t>(i));
    Rational base = solve_cover_lp(lp).value;
    CoverLp more = lp;
    more.rows.push_back(lp.rows[i % lp.rows.size()]);
    std::mt19937 rng(99 + static_cast<std::uint32_t>(i));
    VertexSet extra(lp.columns);
    while (extra.none())
      for (int c = 0; c < lp.columns; ++c)
        if (rng() % 2) extra.set(c);
    more.rows.push_back(extra);
    REQUIRE(solve_cover_lp(more).value >= base);

    CoverLp reduced = more;
    reduced.reduce();
    REQUIRE(solve_cover_lp(reduced).value == solve_cover_lp(more).value);
  }
}

TEST_CASE("fractional optimum never exceeds the integral one") {
  for (int i = 0; i < 30; ++i) {
    CoverLp lp = random_lp(2 + i % 5, 1 + i % 7, 9100 + static_cast<std::uint32_t>(i));
    LpSolution sol = solve_cover_lp(lp);
    CHECK(sol.value <= integral_cover_optimum(lp));
  }
  CHECK_THROWS_AS(
      integral_cover_optimum(CoverLp{40, {row_of(40, {0})}}, 30),
      cap_exceeded);
}

TEST_CASE("fractional fixing numbers of standard graphs") {
  CHECK(fractional_fixing_number(cycle(6)).value == Rational(3) / 2);
  CHECK(fractional_fixing_number(cycle(5)).value == Rational(5) / 4);
  CHECK(fractional_fixing_number(complete(4)).value == 2);
  CHECK(fractional_fixing_number(path(4)).value == 1);
  CHECK(fractional_fixing_number(friendship(2)).value == 2);
  CHECK(fractional_fixing_number(spider(1, 3)).value == 0);
  CHECK(fractional_fixing_number(star(4)).value == Rational(3) / 2);
}

TEST_CASE("fractional metric dimension of standard graphs") {
  CHECK(fractional_metric_dimension(cycle(4)).value == 2);
  CHECK(fractional_metric_dimension(path(4)).value == 1);
  CHECK(fractional_metric_dimension(complete(4)).value == 2);
  CHECK(fractional_metric_dimension(cycle(6)).value == Rational(3) / 2);
  CHECK_THROWS_AS(fractional_metric_dimension(Graph(4, {{0, 1}, {2, 3}})),
                  std::invalid_argument);
}

TEST_CASE("fractional fixing number is a relabeling invariant") {
  std::mt19937 rng(424242);
  for (int i = 0; i < 25; ++i) {
    Graph g = erdos_renyi(3 + i % 6, 9500 + static_cast<std::uint32_t>(i));
    std::vector<int> img(g.order());
    for (int v = 0; v < g.order(); ++v) img[v] = v;
    std::shuffle(img.begin(), img.end(), rng);
    Graph h = relabel(g, Perm(img));
    REQUIRE(fractional_fixing_number(g).value ==
            fractional_fixing_number(h).value);
  }
}

TEST_CASE("fixing LP optimum on graphs matches the oracle") {
  for (int i = 0; i < 30; ++i) {
    Graph g = erdos_renyi(2 + i % 4, 9900 + static_cast<std::uint32_t>(i));
    CoverLp lp = CoverLp::from_fixed_graph(fixed_graph(g));
    if (lp.rows.empty()) continue;
    CHECK(fractional_fixing_number(g).value ==
          oracles::cover_lp_by_vertex_enumeration(lp.columns, row_lists(lp)));
  }
}
