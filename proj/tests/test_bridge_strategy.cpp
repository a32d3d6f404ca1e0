#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bridge_strategy.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"
#include "test_util.hpp"
#include "tree_game.hpp"

using namespace expsearch;

TEST_CASE("gamma coincides with biased depth-first on trees") {
  for (unsigned long long seed = 3; seed <= 14; ++seed) {
    testutil::Rng rng(seed);
    RootedNetwork net = testutil::random_tree(rng, 2 + rng.below(7));
    Decomposition dec = decompose(net);
    GammaStrategy gamma = build_gamma(net, dec);
    Rat v = tree_value(net);
    TreeStructure ts = tree_structure(net);
    for (int leaf : ts.leaves) CHECK(gamma.time_to(net, node_point(net, leaf)) == v);
    CHECK(gamma_upper_bound(dec) == v);
    CHECK(gamma_factor(dec) == Rat(1));
  }
}

TEST_CASE("gamma on qbar uses the bridge-tree rule with the block exhausted at entry") {
  RootedNetwork q = fixture("qbar");
  Decomposition dec = decompose(q);
  GammaStrategy gamma = build_gamma(q, dec);
  REQUIRE(gamma.tree_rule());
  const RootedNetwork& bt = dec.bridge_tree;
  // p(d) = 1/2 + (D(Q_d) - D(Q_a)) / (2 mu) with Q^t branch values
  auto probs_at_root = gamma.tree_rule()->first_probs_at(bt.root());
  REQUIRE(probs_at_root.size() == 2);
  CHECK(bt.arc(probs_at_root[0].first).id == "d");
  CHECK(probs_at_root[0].second == Rat(29, 45));
  CHECK(probs_at_root[1].second == Rat(16, 45));

  CHECK(gamma_upper_bound(dec) == Rat(563, 45));
  CHECK(gamma_factor(dec) == Rat(25, 17));
  CHECK(gamma.time_to(q, node_point(q, q.root())) == Rat(0));

  // the bound covers every grid point, block interiors included
  for (int a = 0; a < q.arc_count(); ++a)
    for (int k = 0; k <= 8; ++k)
      CHECK(gamma.time_to(q, Point{a, q.arc(a).length * k / 8}) <= Rat(563, 45));

  // deep leaves are equalized at the bound: block crossed either way
  CHECK(gamma.time_to(q, node_point(q, *q.find_node("B"))) == Rat(563, 45));
  CHECK(gamma.time_to(q, node_point(q, *q.find_node("C"))) == Rat(563, 45));
}

TEST_CASE("gamma on a 2-arc-connected network is one block exhaustion") {
  RootedNetwork net = fixture("parallel3");
  Decomposition dec = decompose(net);
  GammaStrategy gamma = build_gamma(net, dec);
  CHECK(gamma.tree_rule() == nullptr);
  CHECK(gamma_upper_bound(dec) == Rat(3));
  CHECK(gamma_factor(dec) == Rat(2));
  // times are exactly the fixed block search's reach times
  const PureSearch& r = gamma.block_searches()[0];
  Rat t = 0;
  for (const Step& st : r.steps) {
    Point mid{st.arc, net.arc(st.arc).length / 2};
    CHECK(gamma.time_to(net, mid) == t + net.arc(st.arc).length / 2);
    t += net.arc(st.arc).length;
  }
}

TEST_CASE("gamma stays below mu2 + V(Q^t) across fixtures") {
  for (const char* name : {"qbar", "fig4", "circle_spike"}) {
    RootedNetwork net = fixture(name);
    Decomposition dec = decompose(net);
    GammaStrategy gamma = build_gamma(net, dec);
    Rat bound = gamma_upper_bound(dec);
    for (int a = 0; a < net.arc_count(); ++a)
      for (int k = 0; k <= 10; ++k)
        CHECK(gamma.time_to(net, Point{a, net.arc(a).length * k / 10}) <= bound);
  }
}

TEST_CASE("gamma factor endpoints and monotonicity in r") {
  CHECK(gamma_factor(decompose(fixture("qbar"))) == Rat(25, 17));
  // 2/(1+r^2) decreases in r
  Rat prev;
  bool first = true;
  for (int k = 0; k <= 10; ++k) {
    Rat r(k, 10);
    Rat f = Rat(2) / (1 + r * r);
    if (!first) CHECK(f <= prev);
    prev = f;
    first = false;
  }
}

TEST_CASE("gamma recursion agrees with the expanded four-search lottery on qbar") {
  // realizations: {d-first, a-first} x {b-first, c-first}, blocks exhausted on
  // first contact with the fixed entry search x,y',w',z'
  RootedNetwork q = fixture("qbar");
  Decomposition dec = decompose(q);
  GammaStrategy gamma = build_gamma(q, dec);
  auto step = [&](const char* id, bool rev) { return Step{*q.find_arc(id), rev}; };
  std::vector<Step> blk = {step("x", false), step("y", true), step("w", true), step("z", true)};
  auto seq = [&](bool d_first, bool b_first) {
    std::vector<Step> s;
    auto push_d_side = [&] {
      s.push_back(step("d", false));
      for (const Step& st : blk) s.push_back(st);
      if (b_first) {
        s.push_back(step("b", false));
        s.push_back(step("c", false));
      } else {
        s.push_back(step("c", false));
        s.push_back(step("b", false));
      }
    };
    if (d_first) {
      push_d_side();
      s.push_back(step("a", false));
    } else {
      s.push_back(step("a", false));
      push_d_side();
    }
    return PureSearch{s};
  };
  Rat pd(29, 45), pb(2, 5);
  Lottery lot;
  lot.entries.emplace_back(pd * pb, seq(true, true));
  lot.entries.emplace_back(pd * (1 - pb), seq(true, false));
  lot.entries.emplace_back((1 - pd) * pb, seq(false, true));
  lot.entries.emplace_back((1 - pd) * (1 - pb), seq(false, false));
  validate_lottery(q, lot);
  LotteryStrategy expanded(lot);
  for (int a = 0; a < q.arc_count(); ++a)
    for (int k = 0; k <= 6; ++k) {
      Point h{a, q.arc(a).length * k / 6};
      CHECK(gamma.time_to(q, h) == expanded.time_to(q, h));
    }
}

TEST_CASE("worst case over candidates matches the qbar bound") {
  RootedNetwork q = fixture("qbar");
  Decomposition dec = decompose(q);
  GammaStrategy gamma = build_gamma(q, dec);
  auto cands = hider_candidates(q, dec, Rat(1, 2));
  auto [worst, arg] = max_time(q, gamma, cands);
  CHECK(worst == Rat(563, 45));
}
