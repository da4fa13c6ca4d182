#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <sstream>

#include "relsched/graph.hpp"
#include "relsched/io.hpp"

#include "oracles.hpp"

using namespace relsched;

TEST_CASE("complete digraph construction") {
  SECTION("n=1 has no edges") {
    const Digraph g = complete_digraph(1);
    CHECK(g.n() == 1);
    CHECK(g.edge_count() == 0);
    CHECK(g.source() == 0);
  }
  SECTION("n=2 has both orientations") {
    const Digraph g = complete_digraph(2);
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 0}});
  }
  SECTION("n=5 has n(n-1) edges") {
    CHECK(complete_digraph(5).edge_count() == 20);
    CHECK(complete_digraph(5).is_complete());
  }
  SECTION("n=0 is rejected") { CHECK_THROWS_AS(complete_digraph(0), std::invalid_argument); }
}

TEST_CASE("digraph invariants") {
  CHECK_THROWS_AS(Digraph(3, {{0, 0}}), std::invalid_argument);          // loop
  CHECK_THROWS_AS(Digraph(3, {{0, 1}, {0, 1}}), std::invalid_argument);  // duplicate
  CHECK_THROWS_AS(Digraph(3, {{0, 3}}), std::invalid_argument);          // out of range
  CHECK_THROWS_AS(Digraph(3, {}, 5), std::invalid_argument);             // bad source

  const Digraph g(4, {{2, 1}, {0, 2}, {1, 3}});
  CHECK(g.edges() == std::vector<Edge>{{0, 2}, {1, 3}, {2, 1}});  // sorted
  CHECK(g.has_edge(2, 1));
  CHECK_FALSE(g.has_edge(1, 2));
  CHECK_FALSE(g.is_complete());
}

TEST_CASE("path_edges") {
  CHECK(path_edges(SimplePath{{0}}).empty());
  CHECK(path_edges(SimplePath{{0, 1, 2}}) == std::vector<Edge>{{0, 1}, {1, 2}});
  CHECK(path_edges(SimplePath{{0, 3, 1, 2}}) == std::vector<Edge>{{0, 3}, {3, 1}, {1, 2}});
  CHECK_THROWS_AS(path_edges(SimplePath{}), std::invalid_argument);
}

TEST_CASE("k-path enumeration on small complete graphs") {
  const Digraph g3 = complete_digraph(3);
  SECTION("n=3, k=1") {
    KPathStream stream(g3, 1);
    std::vector<SimplePath> got;
    while (auto p = stream.next()) got.push_back(*p);
    CHECK(got == std::vector<SimplePath>{SimplePath{{0, 1}}, SimplePath{{0, 2}}});
  }
  SECTION("n=3, k=2") {
    KPathStream stream(g3, 2);
    std::vector<SimplePath> got;
    while (auto p = stream.next()) got.push_back(*p);
    CHECK(got == std::vector<SimplePath>{SimplePath{{0, 1, 2}}, SimplePath{{0, 2, 1}}});
  }
  SECTION("n=5, k=4 yields 24 paths") {
    const Digraph g5 = complete_digraph(5);
    KPathStream stream(g5, 4);
    int count = 0;
    while (stream.next()) ++count;
    CHECK(count == 24);
  }
  SECTION("out-of-range k is an empty stream") {
    KPathStream stream(g3, 3);
    CHECK_FALSE(stream.next().has_value());
    KPathStream negative(g3, -1);
    CHECK_FALSE(negative.next().has_value());
  }
  SECTION("k=0 yields the source path once") {
    const Digraph g4 = complete_digraph(4);
    KPathStream stream(g4, 0);
    CHECK(stream.next() == SimplePath{{0}});
    CHECK_FALSE(stream.next().has_value());
  }
}

TEST_CASE("enumeration agrees with the recursive oracle") {
  for (int n = 1; n <= 8; ++n) {
    const Digraph g = complete_digraph(n);
    std::uint64_t expected_count = 1;
    for (int k = 0; k <= n - 1; ++k) {
      const auto expected = oracles::brute_force_k_paths(g, k);
      if (k > 0) expected_count *= static_cast<std::uint64_t>(n - k);
      REQUIRE(expected.size() == expected_count);  // (n-1)(n-2)...(n-k)

      KPathStream stream(g, k);
      std::vector<SimplePath> got;
      while (auto p = stream.next()) {
        REQUIRE(is_simple(*p));
        for (const Edge& e : k > 0 ? path_edges(*p) : std::vector<Edge>{}) REQUIRE(g.has_edge(e));
        got.push_back(*p);
      }
      CHECK(got == expected);  // oracle recursion visits in the same lexicographic order
    }
  }
}

TEST_CASE("enumeration on an incomplete graph") {
  const Digraph g(5, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}});
  KPathStream stream(g, 3);
  std::vector<SimplePath> got;
  while (auto p = stream.next()) got.push_back(*p);
  CHECK(got == std::vector<SimplePath>{SimplePath{{0, 1, 3, 4}}, SimplePath{{0, 2, 3, 4}}});
  CHECK(got == oracles::brute_force_k_paths(g, 3));
}

TEST_CASE("early stop is cheap") {
  const Digraph g = complete_digraph(12);
  KPathStream stream(g, 11);
  CHECK(stream.next().has_value());
  CHECK(stream.extension_steps() == 11);  // one root-to-leaf descent
}

TEST_CASE("graph text format") {
  SECTION("complete declaration") {
    std::istringstream in("complete 4\n");
    const Digraph g = load_graph(in);
    CHECK(g.n() == 4);
    CHECK(g.is_complete());

    std::ostringstream out;
    save_graph(out, g);
    CHECK(out.str() == "complete 4\n");
  }
  SECTION("explicit edge list round-trips") {
    std::istringstream in("n 4 source 1\n# comment\n0 2\n\n2 3\n");
    const Digraph g = load_graph(in);
    CHECK(g.n() == 4);
    CHECK(g.source() == 1);
    CHECK(g.edges() == std::vector<Edge>{{0, 2}, {2, 3}});

    std::ostringstream out;
    save_graph(out, g);
    std::istringstream back(out.str());
    const Digraph again = load_graph(back);
    CHECK(again.edges() == g.edges());
    CHECK(again.source() == g.source());
  }
  SECTION("malformed input is rejected") {
    std::istringstream bad("vertices 3\n");
    CHECK_THROWS_AS(load_graph(bad), std::runtime_error);
  }
}
