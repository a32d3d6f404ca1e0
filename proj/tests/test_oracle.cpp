#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "analytic.hpp"
#include "block_strategy.hpp"
#include "bounds.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"
#include "test_util.hpp"
#include "tree_game.hpp"

using namespace expsearch;

TEST_CASE("hider candidates") {
  RootedNetwork q = fixture("qbar");
  Decomposition dec = decompose(q);
  // whole-arc grid: piece midpoints collapse to arc midpoints
  auto cands = hider_candidates(q, dec, Rat(2));
  std::set<std::string> names;
  for (const Point& p : cands) names.insert(point_str(q, p));
  CHECK(names == std::set<std::string>{"A", "B", "C", "x@1", "y@1", "z@1/2", "w@1/2"});

  // trees: leaf nodes only, any h
  testutil::Rng rng(3);
  RootedNetwork tree = testutil::random_tree(rng, 6);
  Decomposition dt = decompose(tree);
  auto tc = hider_candidates(tree, dt, Rat(1, 4));
  TreeStructure ts = tree_structure(tree);
  CHECK(tc.size() == ts.leaves.size());

  // circle-with-spike at h=1/4: B plus grid points on both circle arcs
  RootedNetwork cs = circle_spike_network(Rat(1, 2));
  auto cc = hider_candidates(cs, decompose(cs), Rat(1, 4));
  // cw splits into 6 pieces, ccw into 2, plus the leaf B
  CHECK(cc.size() == 9);

  // dominated points on request
  auto all = hider_candidates(q, dec, Rat(2), true);
  CHECK(all.size() > cands.size());

  CHECK_THROWS_AS(hider_candidates(q, dec, Rat(0)), Error);
}

TEST_CASE("search enumeration counts") {
  RootedNetwork one = RootedNetwork::build("O", {"O", "L"}, {{"a", "O", "L", Rat(1)}});
  CHECK(enumerate_searches(one, 10).size() == 1);

  RootedNetwork star = RootedNetwork::build(
      "O", {"O", "l1", "l2", "l3"},
      {{"a", "O", "l1", Rat(1)}, {"b", "O", "l2", Rat(1)}, {"c", "O", "l3", Rat(1)}});
  CHECK(enumerate_searches(star, 100).size() == 6);

  // direction-distinct searches: the closing arc of two parallels can run
  // from either endpoint
  RootedNetwork two = RootedNetwork::build(
      "u", {"u", "v"}, {{"a1", "u", "v", Rat(1)}, {"a2", "u", "v", Rat(1)}});
  CHECK(enumerate_searches(two, 100).size() == 4);

  CHECK_THROWS_AS(enumerate_searches(fixture("qbar"), 10), Error);
}

TEST_CASE("matching pennies solves to one half") {
  std::vector<std::vector<Rat>> m = {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}};
  GameSolution sol = solve_matrix_game(m);
  CHECK(sol.value == Rat(1, 2));
  CHECK(sol.gap == Rat(0));
  CHECK(sol.row_mix[0] == Rat(1, 2));
  CHECK(sol.col_mix[1] == Rat(1, 2));
}

TEST_CASE("3-leaf star payoff matrix has the tree value") {
  RootedNetwork star = RootedNetwork::build(
      "O", {"O", "l1", "l2", "l3"},
      {{"a", "O", "l1", Rat(1)}, {"b", "O", "l2", Rat(1)}, {"c", "O", "l3", Rat(1)}});
  OracleMatrix m = oracle_matrix(star, Rat(1), 100);
  CHECK(m.searches.size() == 6);
  CHECK(m.candidates.size() == 3);
  GameSolution sol = solve_matrix_game(m.payoff);
  CHECK(sol.value == Rat(2));
  CHECK(sol.value == tree_value(star));
}

TEST_CASE("oracle on trees returns (mu+D)/2 exactly") {
  for (unsigned long long seed = 1; seed <= 8; ++seed) {
    testutil::Rng rng(seed * 13);
    RootedNetwork tree = testutil::random_tree(rng, 2 + rng.below(5));
    OracleResult res = oracle_value(tree, Rat(1), 1e-9, 100000);
    CHECK(res.value == tree_value(tree));
    CHECK(res.gap == Rat(0));
  }
}

TEST_CASE("oracle on the circle and on three parallel arcs gives mu/2") {
  OracleResult circle = oracle_value(fixture("circle"), Rat(1, 4), 1e-9, 1000);
  CHECK(circle.value == Rat(1));
  OracleResult par = oracle_value(fixture("parallel3"), Rat(1, 4), 1e-9, 10000);
  CHECK(par.value == Rat(3, 2));
}

TEST_CASE("oracle certificates are exact guarantees") {
  RootedNetwork q = fixture("qbar");
  OracleResult res = oracle_value(q, Rat(1), 1e-9, 100000);
  // searcher mix caps every candidate at the value
  Decomposition dec = decompose(q);
  auto cands = hider_candidates(q, dec, Rat(1));
  for (const Point& p : cands) {
    Rat t = 0;
    for (const auto& [s, prob] : res.searcher_mix) t += prob * search_time(q, s, p);
    CHECK(t <= res.value);
  }
  // hider mix forces every enumerated search up to the value
  HiderDistribution nu;
  for (const auto& [pt, prob] : res.hider_mix) nu.atoms.push_back({pt, prob});
  for (const PureSearch& s : enumerate_searches(q, 100000)) {
    LotteryStrategy one(Lottery{{{Rat(1), s}}});
    CHECK(expected_time(q, one, nu) >= res.value);
  }
}

TEST_CASE("qbar regression value at h=1/2 sits inside the bound sandwich") {
  RootedNetwork q = fixture("qbar");
  OracleResult res = oracle_value(q, Rat(1, 2), 1e-9, 100000);
  CHECK(res.value == Rat(129, 14));  // archived solver output
  CHECK(res.value >= Rat(25, 3));
  CHECK(res.value <= Rat(10));
}

TEST_CASE("circle-with-spike oracle matches the closed form within h/2") {
  for (Rat alpha : {Rat(0), Rat(1, 2)}) {
    OracleResult res = oracle_value(circle_spike_network(alpha), Rat(1, 8), 1e-9, 100000);
    Rat v = cs_value(alpha);
    CHECK(res.value <= v);
    CHECK(res.value >= v - Rat(1, 16));
  }
}

TEST_CASE("grid refinement changes the value by at most the resolution") {
  RootedNetwork cs = circle_spike_network(Rat(1, 2));
  Rat prev = -1;
  for (Rat h : {Rat(1, 2), Rat(1, 4), Rat(1, 8)}) {
    OracleResult res = oracle_value(cs, h, 1e-9, 100000);
    if (prev >= 0) CHECK(abs(res.value - prev) <= h);
    prev = res.value;
  }
}

TEST_CASE("fictitious play approximates the exact value") {
  std::vector<std::vector<Rat>> m = {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}};
  GameSolution sol = solve_matrix_game_fictitious(m, 1e-3, 2000000, 42);
  CHECK(rat_double(sol.gap) <= 1e-3);
  CHECK(std::abs(rat_double(sol.value) - 0.5) <= 1e-3);
  CHECK_THROWS_AS(solve_matrix_game_fictitious(m, 1e-15, 500, 42), Error);
}

TEST_CASE("iterative oracle mode stays close to exact") {
  RootedNetwork par = fixture("parallel3");
  OracleResult ex = oracle_value(par, Rat(1, 2), 1e-9, 10000);
  OracleResult it = oracle_value(par, Rat(1, 2), 1e-2, 10000, false, false, 7);
  CHECK(std::abs(rat_double(it.value) - rat_double(ex.value)) <= 1e-2);
  CHECK(!it.exact);
}

TEST_CASE("circle-with-spike oracle value is exact at any grid") {
  // both optimal strategies are whole-arc here, and the grid hider mimics the
  // uniform part exactly through piece midpoints, so no discretization loss
  for (Rat alpha : {Rat(1, 4), Rat(1, 2)})
    for (Rat h : {Rat(1, 2), Rat(1, 8)})
      CHECK(oracle_value(circle_spike_network(alpha), h, 1e-9, 100000).value == cs_value(alpha));
}

TEST_CASE("fictitious play tracks the exact value on random matrices") {
  testutil::Rng rng(2024);
  for (int round = 0; round < 5; ++round) {
    std::size_t m = 5 + rng.below(40), n = 2 + rng.below(6);
    std::vector<std::vector<Rat>> M(m, std::vector<Rat>(n));
    for (auto& row : M)
      for (auto& v : row) v = Rat(rng.below(30), 1 + rng.below(4));
    GameSolution ex = solve_matrix_game(M);
    GameSolution fp = solve_matrix_game_fictitious(M, 5e-3, 50'000'000, 11);
    CHECK(std::abs(rat_double(fp.value) - rat_double(ex.value)) <= 5e-3);
  }
}

TEST_CASE("same seed reproduces the iterative run") {
  RootedNetwork par = fixture("parallel3");
  OracleResult a = oracle_value(par, Rat(1, 2), 1e-2, 10000, false, false, 123);
  OracleResult b = oracle_value(par, Rat(1, 2), 1e-2, 10000, false, false, 123);
  CHECK(a.value == b.value);
  CHECK(a.gap == b.gap);
}

TEST_CASE("oracle cap raises CapExceeded") {
  CHECK_THROWS_AS(oracle_value(fixture("qbar"), Rat(1), 1e-9, 5), Error);
  try {
    oracle_value(fixture("qbar"), Rat(1), 1e-9, 5);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::cap_exceeded);
  }
}
