#include "fixnum/errors.hpp"
#include "fixnum/families.hpp"
#include "fixnum/graph.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <stdexcept>
#include <vector>

using namespace fixnum;

TEST_CASE("basic generators have the right orders, sizes and names") {
  CHECK(path(4).size() == 3);
  CHECK(path(1).size() == 0);
  CHECK(cycle(5).name() == "C5");
  CHECK(cycle(5).size() == 5);
  CHECK(complete(5).size() == 10);
  CHECK(null_graph(4).size() == 0);
  CHECK(star(5).degree(0) == 4);
  CHECK(star(5).name() == "K1,4");
  CHECK(wheel(6).order() == 6);
  CHECK(wheel(6).size() == 10);
  CHECK(wheel(6).degree(5) == 5);  // the hub comes last
  CHECK(fan(4).order() == 5);
  CHECK(fan(4).size() == 7);
  CHECK(friendship(2).order() == 5);
  CHECK(friendship(2).size() == 6);
  CHECK(grid(2, 3).order() == 6);
  CHECK(grid(2, 3).size() == 7);
}

TEST_CASE("complete multipartite and matching variants") {
  Graph k223 = complete_multipartite({2, 2, 3});
  CHECK(k223.order() == 7);
  CHECK(k223.size() == 2 * 2 + 2 * 3 + 2 * 3);
  CHECK_FALSE(k223.adjacent(0, 1));  // same part
  CHECK(k223.adjacent(0, 2));

  CHECK(complete_minus_edge(4).size() == 5);
  CHECK_FALSE(complete_minus_edge(4).adjacent(0, 1));

  Graph k4m = complete_minus_perfect_matching(4);
  CHECK(k4m.size() == 4);
  CHECK(oracles::isomorphic(k4m, cycle(4)));
  CHECK(oracles::isomorphic(complete_multipartite({2, 2}), cycle(4)));
}

TEST_CASE("hamming and johnson graphs have the textbook parameters") {
  CHECK(oracles::isomorphic(hamming(2, 2), cycle(4)));
  Graph h23 = hamming(2, 3);
  CHECK(h23.order() == 9);
  CHECK(h23.size() == 18);
  for (int v = 0; v < 9; ++v) CHECK(h23.degree(v) == 4);

  Graph j42 = johnson(4, 2);
  CHECK(j42.order() == 6);
  CHECK(j42.size() == 12);
  CHECK(oracles::isomorphic(j42, complete_multipartite({2, 2, 2})));

  Graph j52 = johnson(5, 2);
  CHECK(j52.order() == 10);
  for (int v = 0; v < 10; ++v) CHECK(j52.degree(v) == 6);
}

TEST_CASE("c gadget attaches two pendants to an even cycle") {
  Graph g = c_gadget(2);
  CHECK(g.order() == 10);
  CHECK(g.size() == 10);
  CHECK(g.degree(8) == 1);
  CHECK(g.degree(9) == 1);
  CHECK(g.adjacent(8, 0));
  CHECK(g.adjacent(9, 4));
}

TEST_CASE("join connects all cross pairs") {
  Graph j = join(complete(2), null_graph(3));
  CHECK(j.order() == 5);
  CHECK(j.size() == 1 + 2 * 3);
  for (int u = 0; u < 2; ++u)
    for (int v = 2; v < 5; ++v) CHECK(j.adjacent(u, v));
  CHECK(oracles::isomorphic(join(null_graph(1), cycle(4)), wheel(5)));
}

TEST_CASE("corona hangs one copy of the second factor per vertex") {
  Graph c = corona(path(3), complete(2));
  CHECK(c.order() == 9);
  CHECK(c.size() == 11);
  CHECK(c.adjacent(0, 3));
  CHECK(c.adjacent(0, 4));
  CHECK(c.adjacent(3, 4));
  CHECK_FALSE(c.adjacent(0, 5));
  CHECK(oracles::isomorphic(corona(complete(2), complete(1)), path(4)));
  CHECK(oracles::isomorphic(corona(complete(1), complete(3)), complete(4)));
}

TEST_CASE("composition is the lexicographic product") {
  CHECK(oracles::isomorphic(composition(complete(2), null_graph(2)), cycle(4)));
  CHECK(oracles::isomorphic(composition(path(2), complete(2)), complete(4)));
  Graph g = composition(path(3), complete(2));
  CHECK(g.order() == 6);
  // deg(u,v) = n*deg_G(u) + deg_H(v)
  for (int u = 0; u < 3; ++u)
    for (int v = 0; v < 2; ++v)
      CHECK(g.degree(u * 2 + v) == 2 * path(3).degree(u) + 1);
  CHECK_THROWS_AS(composition(Graph(4, {{0, 1}, {2, 3}}), complete(2)),
                  std::invalid_argument);
}

TEST_CASE("generalized lexicographic blowups expand fibers in place") {
  // Trivial fibers reproduce the base.
  GeneralizedLexicoSpec same{cycle(5), std::vector<FiberSpec>(5, {false, 1})};
  CHECK(oracles::isomorphic(generalized_lexicographic(same), cycle(5)));
  // Doubling one endpoint of an edge gives the path with a twin leaf.
  GeneralizedLexicoSpec spec{path(2), {{false, 2}, {false, 1}}};
  Graph g = generalized_lexicographic(spec);
  CHECK(oracles::isomorphic(g, star(3)));
  // Null fibers over an edge give the complete bipartite blowup.
  GeneralizedLexicoSpec bip{path(2), {{false, 2}, {false, 2}}};
  CHECK(oracles::isomorphic(generalized_lexicographic(bip), cycle(4)));
  // A complete fiber over one vertex forms a clique block.
  GeneralizedLexicoSpec cl{path(2), {{true, 3}, {false, 1}}};
  CHECK(oracles::isomorphic(generalized_lexicographic(cl), complete(4)));
  GeneralizedLexicoSpec bad{path(2), {{false, 2}}};
  CHECK_THROWS_AS(generalized_lexicographic(bad), std::invalid_argument);
}

TEST_CASE("doubled graphs pair twins and embed the original") {
  Graph d = double_graph(path(3));
  CHECK(d.order() == 6);
  CHECK(d.size() == 8);
  for (int u = 0; u < 3; ++u) CHECK_FALSE(d.adjacent(2 * u, 2 * u + 1));
  for (auto [u, v] : path(3).edges()) {
    CHECK(d.adjacent(2 * u, 2 * v));
    CHECK(d.adjacent(2 * u, 2 * v + 1));
    CHECK(d.adjacent(2 * u + 1, 2 * v));
    CHECK(d.adjacent(2 * u + 1, 2 * v + 1));
  }
  CHECK(are_twins(d, 0, 1));
  CHECK(are_twins(d, 2, 3));
}

TEST_CASE("trees with prescribed leaf counts") {
  Graph t = tree_with_fixf(7, 2);
  CHECK(t.order() == 7);
  CHECK(t.size() == 6);
  CHECK(oracles::isomorphic(tree_with_fixf(5, 4), star(5)));
  CHECK_THROWS_AS(tree_with_fixf(6, 4), std::invalid_argument);  // k = n-2
  CHECK_THROWS_AS(tree_with_fixf(7, 1), std::invalid_argument);

  CHECK(oracles::isomorphic(spider(1, 2), path(4)));
  Graph sp = spider(1, 3);
  CHECK(sp.order() == 7);
  CHECK(sp.degree(0) == 3);
}

TEST_CASE("seeded random graphs are reproducible and trees are trees") {
  Graph a = erdos_renyi(7, 12345);
  Graph b = erdos_renyi(7, 12345);
  CHECK(a.edges() == b.edges());
  CHECK(erdos_renyi(7, 12346).edges() != a.edges());

  for (std::uint32_t s = 0; s < 20; ++s) {
    Graph t = random_tree(8, 900 + s);
    CHECK(t.order() == 8);
    CHECK(t.size() == 7);
    CHECK(is_connected(t));
  }
}

TEST_CASE("generator argument validation") {
  CHECK_THROWS_AS(path(0), std::invalid_argument);
  CHECK_THROWS_AS(cycle(2), std::invalid_argument);
  CHECK_THROWS_AS(star(1), std::invalid_argument);
  CHECK_THROWS_AS(wheel(4), std::invalid_argument);
  CHECK_THROWS_AS(friendship(0), std::invalid_argument);
  CHECK_THROWS_AS(c_gadget(0), std::invalid_argument);
  CHECK_THROWS_AS(complete_minus_perfect_matching(5), std::invalid_argument);
  CHECK_THROWS_AS(complete_multipartite({}), std::invalid_argument);
  CHECK_THROWS_AS(complete_multipartite({2, 0}), std::invalid_argument);
  CHECK_THROWS_AS(johnson(3, 3), std::invalid_argument);
  CHECK_THROWS_AS(johnson(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(hamming(0, 2), std::invalid_argument);
  CHECK_THROWS_AS(hamming(2, 1), std::invalid_argument);
  CHECK_THROWS_AS(grid(0, 2), std::invalid_argument);
  CHECK_THROWS_AS(spider(0, 2), std::invalid_argument);
  CHECK_THROWS_AS(spider(1, 1), std::invalid_argument);
}

TEST_CASE("huge product orders are rejected by the size cap") {
  CHECK_THROWS_AS(hamming(10, 10), cap_exceeded);
  CHECK_THROWS_AS(composition(complete(300), complete(300)), cap_exceeded);
}
