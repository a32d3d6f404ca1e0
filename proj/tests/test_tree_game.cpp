#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>

#include "analytic.hpp"
#include "decomposition.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"
#include "test_util.hpp"
#include "tree_game.hpp"

using namespace expsearch;

namespace {

std::map<std::string, Rat> ebd_by_name(const RootedNetwork& net) {
  std::map<std::string, Rat> out;
  for (const auto& [leaf, mass] : ebd(net)) out[net.node_name(leaf)] = mass;
  return out;
}

RootedNetwork qbar_tree() { return decompose(fixture("qbar")).bridge_tree; }

RootedNetwork fig4_tree() { return decompose(fixture("fig4")).bridge_tree; }

}  // namespace

TEST_CASE("EBD splits mass in proportion to branch length") {
  // two equal branches
  RootedNetwork twin = RootedNetwork::build(
      "O", {"O", "l1", "l2"}, {{"a", "O", "l1", Rat(3, 2)}, {"b", "O", "l2", Rat(3, 2)}});
  auto e = ebd_by_name(twin);
  CHECK(e["l1"] == Rat(1, 2));
  CHECK(e["l2"] == Rat(1, 2));

  // star: one arc of length 1 and n arcs of length sqrt(2)/n
  RootedNetwork star = star_network(5);
  auto es = ebd_by_name(star);
  Rat denom = 1 + kSqrt2;
  CHECK(es["L"] == 1 / denom);
  CHECK(es["s1"] == (kSqrt2 / 5) / denom);

  // qbar bridge tree: a=2 and d=2 from the root, b=2 and c=3 beyond d
  auto eq = ebd_by_name(qbar_tree());
  CHECK(eq["A"] == Rat(2, 9));
  CHECK(eq["B"] == Rat(14, 45));
  CHECK(eq["C"] == Rat(21, 45));
}

TEST_CASE("EBD equal-density holds exactly at every branch node") {
  for (unsigned long long seed = 1; seed <= 25; ++seed) {
    testutil::Rng rng(seed);
    RootedNetwork net = testutil::random_tree(rng, 2 + rng.below(8));
    TreeStructure ts = tree_structure(net);
    auto masses = ebd(net);
    std::vector<Rat> leaf_mass(net.node_count(), Rat(0));
    for (const auto& [leaf, m] : masses) leaf_mass[leaf] = m;
    // branch mass = sum of leaf masses below it
    std::vector<Rat> below(net.arc_count(), Rat(0));
    std::function<Rat(int)> fill = [&](int arc) {
      Rat m = leaf_mass[ts.arc_child[arc]];
      for (int c : ts.child_arcs[ts.arc_child[arc]]) m += fill(c);
      return below[arc] = m;
    };
    for (int c : ts.child_arcs[net.root()]) fill(c);
    for (int v = 0; v < net.node_count(); ++v) {
      const auto& kids = ts.child_arcs[v];
      if (kids.size() < 2) continue;
      for (size_t i = 1; i < kids.size(); ++i)
        CHECK(below[kids[i]] * ts.branch_mu[kids[0]] == below[kids[0]] * ts.branch_mu[kids[i]]);
    }
  }
}

TEST_CASE("D values") {
  CHECK(ebd_distance(qbar_tree()) == Rat(181, 45));
  CHECK(ebd_distance(fig4_tree()) == Rat(14, 8));
  RootedNetwork one = RootedNetwork::build("O", {"O", "L"}, {{"a", "O", "L", Rat(7, 2)}});
  CHECK(ebd_distance(one) == Rat(7, 2));
}

TEST_CASE("tree game values") {
  RootedNetwork one = RootedNetwork::build("O", {"O", "L"}, {{"a", "O", "L", Rat(1)}});
  CHECK(tree_value(one) == Rat(1));
  CHECK(tree_value(qbar_tree()) == Rat(293, 45));
  // star(n): V = (2 + sqrt 2 + 1/n) / (1 + sqrt 2)
  for (long n : {1L, 2L, 7L}) {
    double expect = (2 + std::sqrt(2.0) + 1.0 / n) / (1 + std::sqrt(2.0));
    CHECK(std::abs(rat_double(tree_value(star_network(n))) - expect) < 1e-10);
  }
}

TEST_CASE("non-trees are rejected") {
  CHECK_THROWS_AS(ebd(fixture("qbar")), Error);
  CHECK_THROWS_AS(ebd_distance(fixture("circle")), Error);
  CHECK_THROWS_AS(tree_value(fixture("parallel3")), Error);
}

TEST_CASE("biased depth-first equalizes every leaf at (mu+D)/2") {
  // symmetric branches get probability 1/2
  RootedNetwork twin = RootedNetwork::build(
      "O", {"O", "l1", "l2"}, {{"a", "O", "l1", Rat(2)}, {"b", "O", "l2", Rat(2)}});
  auto rule = biased_dfs(twin);
  CHECK(rule->first_probs_at(twin.root())[0].second == Rat(1, 2));

  for (unsigned long long seed = 1; seed <= 20; ++seed) {
    testutil::Rng rng(seed ^ 0xBEEF);
    RootedNetwork net = testutil::random_tree(rng, 2 + rng.below(8));
    Rat v = tree_value(net);
    auto dfs = biased_dfs(net);
    TreeStructure ts = tree_structure(net);
    for (int leaf : ts.leaves) CHECK(dfs->time_to(net, node_point(net, leaf)) == v);
    // branch-first probabilities sum to one at each branch node
    for (int x = 0; x < net.node_count(); ++x) {
      const auto& fp = dfs->first_probs_at(x);
      if (fp.empty()) continue;
      Rat sum = 0;
      for (const auto& [arc, p] : fp) {
        sum += p;
        CHECK(p >= 0);
        CHECK(p <= 1);
      }
      CHECK(sum == Rat(1));
    }
  }
}

namespace {

// Expands the biased depth-first decision rule into its explicit lottery of
// depth-first searches, for cross-checking the recursion.
void expand_rule(const RootedNetwork& net, const BiasedDfs& rule, int node,
                 std::vector<std::pair<Rat, std::vector<Step>>>& acc) {
  const TreeStructure& ts = rule.structure();
  const auto& kids = ts.child_arcs[node];
  std::vector<std::pair<Rat, std::vector<int>>> orders = {{Rat(1), {}}};
  // nested binarization: child i goes before or after everything later
  std::function<void(std::vector<int>, Rat, size_t)> gen = [&](std::vector<int> prefix, Rat prob,
                                                               size_t i) {
    if (i + 1 >= kids.size()) {
      if (i < kids.size()) prefix.push_back(kids[i]);
      orders.emplace_back(prob, prefix);
      return;
    }
    Rat q = rule.prob_before(node, kids[i], kids[i + 1]);
    auto head = prefix;
    head.push_back(kids[i]);
    // kids[i] first, remainder recursively
    std::function<void(std::vector<int>, Rat, size_t)> rest_then;
    gen(head, prob * q, i + 1);
    // remainder first, kids[i] last: generate remainders then append
    std::vector<std::pair<Rat, std::vector<int>>> keep;
    std::swap(keep, orders);
    gen(prefix, Rat(1), i + 1);
    for (auto& [p2, ord] : orders) {
      ord.push_back(kids[i]);
      keep.emplace_back(prob * (1 - q) * p2, ord);
    }
    std::swap(orders, keep);
  };
  if (kids.empty()) {
    acc.emplace_back(Rat(1), std::vector<Step>{});
    return;
  }
  orders.clear();
  gen({}, Rat(1), 0);
  for (const auto& [p, order] : orders) {
    std::vector<std::pair<Rat, std::vector<Step>>> partial = {{p, {}}};
    for (int arc : order) {
      int child = ts.arc_child[arc];
      std::vector<std::pair<Rat, std::vector<Step>>> sub;
      expand_rule(net, rule, child, sub);
      std::vector<std::pair<Rat, std::vector<Step>>> next;
      for (const auto& [pa, sa] : partial)
        for (const auto& [pb, sb] : sub) {
          auto steps = sa;
          steps.push_back({arc, net.arc(arc).v != child});
          steps.insert(steps.end(), sb.begin(), sb.end());
          next.emplace_back(pa * pb, steps);
        }
      partial = std::move(next);
    }
    for (auto& e : partial) acc.push_back(e);
  }
}

}  // namespace

TEST_CASE("biased depth-first recursion agrees with its expanded lottery") {
  for (unsigned long long seed = 1; seed <= 10; ++seed) {
    testutil::Rng rng(seed * 419);
    RootedNetwork net = testutil::random_tree(rng, 2 + rng.below(4));
    auto rule = biased_dfs(net);
    std::vector<std::pair<Rat, std::vector<Step>>> acc;
    expand_rule(net, *rule, net.root(), acc);
    Lottery lot;
    Rat total = 0;
    for (auto& [p, steps] : acc) {
      lot.entries.emplace_back(p, PureSearch{steps});
      total += p;
    }
    REQUIRE(total == Rat(1));
    validate_lottery(net, lot);
    LotteryStrategy expanded(lot);
    for (int a = 0; a < net.arc_count(); ++a)
      for (int k = 1; k <= 3; ++k) {
        Point h{a, net.arc(a).length * k / 3};
        CHECK(rule->time_to(net, h) == expanded.time_to(net, h));
      }
  }
}

TEST_CASE("star(2): both leaves meet the tree value under biased depth-first") {
  RootedNetwork star = star_network(2);
  Rat v = tree_value(star);
  auto dfs = biased_dfs(star);
  for (const char* leaf : {"L", "s1", "s2"})
    CHECK(dfs->time_to(star, node_point(star, *star.find_node(leaf))) == v);
}

TEST_CASE("worst leaf response to biased depth-first is the tree value") {
  testutil::Rng rng(5150);
  RootedNetwork net = testutil::random_tree(rng, 7);
  auto rule = biased_dfs(net);
  TreeStructure ts = tree_structure(net);
  std::vector<Point> leaves;
  for (int leaf : ts.leaves) leaves.push_back(node_point(net, leaf));
  auto [worst, arg] = max_time(net, *rule, leaves);
  CHECK(worst == tree_value(net));
}

TEST_CASE("bayes on the clockwise circle-with-spike tree") {
  // the P+ search tree: cut the circle at O, so ccw hangs off A as a stub
  Rat alpha(1, 2);
  RootedNetwork tree = RootedNetwork::build(
      "O", {"O", "A", "B", "O2"},
      {{"cw", "O", "A", 1 + alpha}, {"spike", "A", "B", Rat(1)}, {"ccw", "A", "O2", 1 - alpha}});
  for (Rat p : {Rat(0), Rat(1, 5), Rat(2, 5)}) {
    HiderDistribution nu;
    nu.atoms.push_back({node_point(tree, *tree.find_node("B")), 1 - p});
    if (p != 0) nu.uniforms.push_back({0, Rat(0), 1 + alpha, p});
    BayesResult res = bayes_tree_search(tree, nu);
    CHECK(res.value == p * (1 + alpha) / 2 + (1 - p) * (2 + alpha));
  }
}

TEST_CASE("bayes on a path finds the forced order") {
  RootedNetwork path = RootedNetwork::build(
      "O", {"O", "M", "L"}, {{"a", "O", "M", Rat(2)}, {"b", "M", "L", Rat(3)}});
  HiderDistribution nu;
  nu.atoms.push_back({node_point(path, *path.find_node("L")), Rat(1)});
  BayesResult res = bayes_tree_search(path, nu);
  CHECK(res.value == Rat(5));
  REQUIRE(res.search.steps.size() == 2);
  CHECK(res.net.arc(res.search.steps[0].arc).id == "a");
}

TEST_CASE("bayes on the 3-leaf star visits atoms by decreasing mass") {
  RootedNetwork star = RootedNetwork::build(
      "O", {"O", "l1", "l2", "l3"},
      {{"a", "O", "l1", Rat(1)}, {"b", "O", "l2", Rat(1)}, {"c", "O", "l3", Rat(1)}});
  HiderDistribution nu;
  nu.atoms.push_back({node_point(star, 1), Rat(1, 2)});
  nu.atoms.push_back({node_point(star, 2), Rat(3, 10)});
  nu.atoms.push_back({node_point(star, 3), Rat(1, 5)});
  BayesResult res = bayes_tree_search(star, nu);
  CHECK(res.value == Rat(17, 10));  // 0.5*1 + 0.3*2 + 0.2*3
  CHECK(res.net.arc(res.search.steps[0].arc).id == "a");
  CHECK(res.net.arc(res.search.steps[1].arc).id == "b");
  CHECK(res.net.arc(res.search.steps[2].arc).id == "c");
}

TEST_CASE("bayes matches exhaustive minimization on small random trees") {
  int tested = 0;
  for (unsigned long long seed = 1; tested < 30; ++seed) {
    testutil::Rng rng(seed * 77);
    RootedNetwork net = testutil::random_tree(rng, 2 + rng.below(5));
    HiderDistribution nu = testutil::random_hider(rng, net, /*segments=*/false);
    BayesResult res = bayes_tree_search(net, nu);
    REQUIRE(is_valid(net, res.search));
    Rat best;
    bool first = true;
    for (const PureSearch& s : enumerate_searches(net, 100000)) {
      LotteryStrategy one(Lottery{{{Rat(1), s}}});
      Rat t = expected_time(net, one, nu);
      if (first || t < best) best = t, first = false;
    }
    CHECK(res.value == best);
    ++tested;
  }
}

TEST_CASE("bayes handles uniform segments without interruption") {
  int tested = 0;
  for (unsigned long long seed = 5; tested < 15; ++seed) {
    testutil::Rng rng(seed * 1311);
    RootedNetwork net = testutil::random_tree(rng, 2 + rng.below(4));
    HiderDistribution nu = testutil::random_hider(rng, net, /*segments=*/true);
    if (nu.uniforms.empty()) continue;
    BayesResult res = bayes_tree_search(net, nu);
    // re-evaluate the returned search against the same distribution mapped
    // onto the subdivided network
    HiderDistribution mapped;
    for (const auto& a : nu.atoms) {
      auto nd = point_node(net, a.at);
      REQUIRE(nd);
      mapped.atoms.push_back({node_point(res.net, *res.net.find_node(net.node_name(*nd))), a.mass});
    }
    for (const auto& u : nu.uniforms) {
      // locate the pieces of the original arc in the subdivided net
      Rat start = 0;
      std::string base = net.arc(u.arc).id;
      for (int i = 0; i < res.net.arc_count(); ++i) {
        const std::string& id = res.net.arc(i).id;
        if (id.substr(0, id.find('#')) != base) continue;
        Rat end = start + res.net.arc(i).length;
        Rat lo = std::max(u.lo, start), hi = std::min(u.hi, end);
        if (hi > lo)
          mapped.uniforms.push_back({i, lo - start, hi - start, u.mass * (hi - lo) / (u.hi - u.lo)});
        start = end;
      }
    }
    LotteryStrategy one(Lottery{{{Rat(1), res.search}}});
    CHECK(expected_time(res.net, one, mapped) == res.value);
    // optimality vs exhaustive search on the subdivided network
    Rat best;
    bool first = true;
    for (const PureSearch& s : enumerate_searches(res.net, 2000000)) {
      LotteryStrategy cand(Lottery{{{Rat(1), s}}});
      Rat t = expected_time(res.net, cand, mapped);
      if (first || t < best) best = t, first = false;
    }
    CHECK(res.value == best);
    ++tested;
  }
}

TEST_CASE("solve_tree_game bundles the pieces") {
  TreeGameSolution sol = solve_tree_game(qbar_tree());
  CHECK(sol.D == Rat(181, 45));
  CHECK(sol.value == Rat(293, 45));
  Rat total = 0;
  for (const auto& [leaf, mass] : sol.ebd) total += mass;
  CHECK(total == Rat(1));
}
