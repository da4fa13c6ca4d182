#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "relsched/engine.hpp"
#include "relsched/schedule.hpp"

#include "oracles.hpp"

using namespace relsched;

TEST_CASE("rational arithmetic") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK(Rational(-6, 3).to_string() == "-2");
  CHECK(Rational(3, 2).to_string() == "3/2");
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);

  CHECK(Rational::parse("-3") == Rational(-3));
  CHECK(Rational::parse("1.25") == Rational(5, 4));
  CHECK(Rational::parse(".5") == Rational(1, 2));
  CHECK(Rational::parse("+2.0") == Rational(2));
  CHECK_THROWS_AS(Rational::parse("1.2.3"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
}

TEST_CASE("run_schedule basics") {
  SECTION("empty schedule leaves only the source settled") {
    const Digraph g = complete_digraph(3);
    const auto d = run_schedule(g, WeightAssignment::uniform(g, Rational(1)), Schedule{3, {}});
    CHECK(d.at(0) == Rational(0));
    CHECK_FALSE(d.finite(1));
    CHECK_FALSE(d.finite(2));
  }
  SECTION("single relax") {
    const Digraph g = complete_digraph(2);
    WeightAssignment w(2);
    w.set({0, 1}, Rational(5));
    w.set({1, 0}, Rational(7));
    const auto d = run_schedule(g, w, Schedule{2, {{0, 1}}});
    CHECK(d.at(1) == Rational(5));
  }
  SECTION("steps outside the graph are rejected before execution") {
    const Digraph g(3, {{0, 1}});
    WeightAssignment w(3);
    w.set({0, 1}, Rational(1));
    CHECK_THROWS_AS(run_schedule(g, w, Schedule{3, {{1, 2}}}), std::invalid_argument);
    CHECK_THROWS_AS(run_schedule(g, w, Schedule{4, {}}), std::invalid_argument);
  }
}

TEST_CASE("adversarial weights") {
  const Digraph g = complete_digraph(3);
  SECTION("trivial path gives all ones") {
    const WeightAssignment w = adversarial_weights(g, SimplePath{{0}});
    for (const Edge& e : g.edges()) CHECK(w.at(e) == Rational(1));
  }
  SECTION("path edges get zero, everything else one") {
    const WeightAssignment w = adversarial_weights(g, SimplePath{{0, 1, 2}});
    int zeros = 0;
    for (const Edge& e : g.edges())
      if (w.at(e).is_zero()) ++zeros;
    CHECK(zeros == 2);
    CHECK(w.at({0, 1}).is_zero());
    CHECK(w.at({1, 2}).is_zero());
  }
  SECTION("the zero path is reflected in the exact distances") {
    const WeightAssignment w = adversarial_weights(g, SimplePath{{0, 2, 1}});
    const auto exact = exact_distances(g, w);
    REQUIRE(exact.ok());
    CHECK(exact.distances.at(1) == Rational(0));
  }
  SECTION("non-source or non-simple paths are rejected") {
    CHECK_THROWS_AS(adversarial_weights(g, SimplePath{{1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(adversarial_weights(g, SimplePath{{0, 1, 0}}), std::invalid_argument);
  }
}

TEST_CASE("round robin finds the adversarial zero path") {
  const Digraph g = complete_digraph(4);
  const SimplePath p{{0, 2, 1, 3}};
  const WeightAssignment w = adversarial_weights(g, p);
  const auto d = run_schedule(g, w, round_robin(g, 3));
  CHECK(d.at(3) == Rational(0));
  const auto exact = exact_distances(g, w);
  REQUIRE(exact.ok());
  CHECK(d == exact.distances);
}

TEST_CASE("exact distances") {
  SECTION("all weights one on complete n=3") {
    const Digraph g = complete_digraph(3);
    const auto r = exact_distances(g, WeightAssignment::uniform(g, Rational(1)));
    REQUIRE(r.ok());
    CHECK(r.distances.at(0) == Rational(0));
    CHECK(r.distances.at(1) == Rational(1));
    CHECK(r.distances.at(2) == Rational(1));
  }
  SECTION("negative edge shortcut") {
    const Digraph g = complete_digraph(3);
    WeightAssignment w = WeightAssignment::uniform(g, Rational(10));
    w.set({0, 1}, Rational(2));
    w.set({1, 2}, Rational(-5));
    const auto r = exact_distances(g, w);
    REQUIRE(r.ok());
    CHECK(r.distances.at(2) == Rational(-3));
    CHECK(r.distances == oracles::brute_force_distances(g, w));
  }
  SECTION("negative cycle is reported") {
    const Digraph g = complete_digraph(3);
    WeightAssignment w = WeightAssignment::uniform(g, Rational(10));
    w.set({1, 2}, Rational(0));
    w.set({2, 1}, Rational(-1));
    const auto r = exact_distances(g, w);
    REQUIRE_FALSE(r.ok());
    const VertexId c = r.negative_cycle->vertex;
    CHECK((c == 1 || c == 2));
  }
  SECTION("a negative cycle the source cannot reach is ignored") {
    // source component {0,1}; cycle on {2,3} unreachable from 0
    const Digraph g(4, {{0, 1}, {2, 3}, {3, 2}, {2, 0}});
    WeightAssignment w(4);
    w.set({0, 1}, Rational(4));
    w.set({2, 3}, Rational(-1));
    w.set({3, 2}, Rational(0));
    w.set({2, 0}, Rational(1));
    const auto r = exact_distances(g, w);
    REQUIRE(r.ok());
    CHECK(r.distances.at(1) == Rational(4));
    CHECK_FALSE(r.distances.finite(2));
  }
}

TEST_CASE("exact distances agree with the simple-path oracle") {
  std::mt19937_64 rng(2024);
  int checked = 0;
  while (checked < 60) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const Digraph g = complete_digraph(n);
    const WeightAssignment w = oracles::random_integer_weights(g, -4, 12, rng);
    const auto r = exact_distances(g, w);
    if (!r.ok()) continue;  // oracle below assumes no negative cycles
    CHECK(r.distances == oracles::brute_force_distances(g, w));
    ++checked;
  }
}

TEST_CASE("schedule runs never beat the exact distances") {
  std::mt19937_64 rng(77);
  int checked = 0;
  while (checked < 40) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const Digraph g = complete_digraph(n);
    const WeightAssignment w = oracles::random_integer_weights(g, -3, 9, rng);
    const auto exact = exact_distances(g, w);
    if (!exact.ok()) continue;
    const Schedule s = oracles::random_schedule(g, rng() % (2 * g.edge_count() + 1), rng);
    const auto d = run_schedule(g, w, s);
    for (int v = 0; v < n; ++v) {
      REQUIRE_FALSE(dist_less(d.at(v), exact.distances.at(v)));
    }
    ++checked;
  }
}

TEST_CASE("doubling all weights doubles all finite distances") {
  std::mt19937_64 rng(31);
  const Digraph g = complete_digraph(5);
  const WeightAssignment w = oracles::random_integer_weights(g, -2, 10, rng);
  WeightAssignment doubled(g.n());
  for (const Edge& e : g.edges()) doubled.set(e, w.at(e) * Rational(2));
  const Schedule s = round_robin(g);
  const auto d1 = run_schedule(g, w, s);
  const auto d2 = run_schedule(g, doubled, s);
  for (int v = 0; v < g.n(); ++v) {
    REQUIRE(d1.finite(v));
    CHECK(*d2.at(v) == *d1.at(v) * Rational(2));
  }
}

TEST_CASE("negative cycle residue") {
  SECTION("exact distances have no residue") {
    const Digraph g = complete_digraph(4);
    std::mt19937_64 rng(5);
    const WeightAssignment w = oracles::random_integer_weights(g, 0, 8, rng);
    const auto d = run_schedule(g, w, round_robin(g));
    CHECK_FALSE(detect_negative_cycle_residue(g, w, d));
  }
  SECTION("a reachable negative cycle always leaves a residue") {
    const Digraph g = complete_digraph(4);
    WeightAssignment w = WeightAssignment::uniform(g, Rational(3));
    w.set({1, 2}, Rational(0));
    w.set({2, 3}, Rational(0));
    w.set({3, 1}, Rational(-1));  // 3-cycle of total weight -1
    const auto d = run_schedule(g, w, round_robin(g));
    CHECK(detect_negative_cycle_residue(g, w, d));
  }
  SECTION("an empty schedule leaves the first relaxation pending") {
    const Digraph g = complete_digraph(2);
    const WeightAssignment w = WeightAssignment::uniform(g, Rational(1));
    const auto d = run_schedule(g, w, Schedule{2, {}});
    CHECK(detect_negative_cycle_residue(g, w, d));
  }
}
