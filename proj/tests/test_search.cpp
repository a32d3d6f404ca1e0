#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "analytic.hpp"
#include "decomposition.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"
#include "test_util.hpp"
#include "tree_game.hpp"

using namespace expsearch;

namespace {

// Builds a search from "d x b y' w' c z' a" style notation.
PureSearch steps(const RootedNetwork& net, const std::vector<std::string>& ids) {
  PureSearch s;
  for (std::string id : ids) {
    bool rev = !id.empty() && id.back() == '\'';
    if (rev) id.pop_back();
    s.steps.push_back({*net.find_arc(id), rev});
  }
  return s;
}

const std::vector<std::string> kS1 = {"d", "x", "b", "y'", "w'", "c", "z'", "a"};
const std::vector<std::string> kS2 = {"a", "d", "z", "c", "w", "y", "b", "x'"};

}  // namespace

TEST_CASE("validity of the worked searches on qbar") {
  RootedNetwork q = fixture("qbar");
  CHECK(is_valid(q, steps(q, kS1)));
  CHECK(is_valid(q, steps(q, kS2)));
  // starting inside the block is not a search: x is not incident to the root
  CHECK(!is_valid(q, steps(q, {"x", "d", "b", "y'", "w'", "c", "z'", "a"})));
  // covering an arc twice or skipping one is invalid
  CHECK(!is_valid(q, steps(q, {"d", "x", "b", "y'", "w'", "c", "z'", "z"})));
}

TEST_CASE("search times reproduce the worked table") {
  RootedNetwork q = fixture("qbar");
  PureSearch s1 = steps(q, kS1), s2 = steps(q, kS2);
  auto at_node = [&](const char* name) { return node_point(q, *q.find_node(name)); };
  struct Row { const char* node; int t1, t2; };
  for (auto [node, t1, t2] : {Row{"A", 15, 2}, Row{"B", 6, 13}, Row{"C", 12, 8}}) {
    CHECK(search_time(q, s1, at_node(node)) == Rat(t1));
    CHECK(search_time(q, s2, at_node(node)) == Rat(t2));
  }
  // the x row of the table sits at offset 1/2 along x, the others at centers
  CHECK(search_time(q, s1, Point{*q.find_arc("x"), Rat(1, 2)}) == Rat(5, 2));
  CHECK(search_time(q, s2, Point{*q.find_arc("x"), Rat(1, 2)}) == Rat(29, 2));
  CHECK(search_time(q, s1, Point{*q.find_arc("y"), Rat(1)}) == Rat(7));
  CHECK(search_time(q, s2, Point{*q.find_arc("y"), Rat(1)}) == Rat(10));
  CHECK(search_time(q, s1, Point{*q.find_arc("z"), Rat(1, 2)}) == Rat(25, 2));
  CHECK(search_time(q, s2, Point{*q.find_arc("z"), Rat(1, 2)}) == Rat(9, 2));
  CHECK(search_time(q, s1, Point{*q.find_arc("w"), Rat(1, 2)}) == Rat(17, 2));
  CHECK(search_time(q, s2, Point{*q.find_arc("w"), Rat(1, 2)}) == Rat(17, 2));
  CHECK(search_time(q, s1, at_node("O")) == Rat(0));
}

TEST_CASE("row-sum identity on every block arc: T(S1,H)+T(S2,H) = mu + pi(H) = 17") {
  RootedNetwork q = fixture("qbar");
  PureSearch s1 = steps(q, kS1), s2 = steps(q, kS2);
  for (const char* id : {"x", "y", "z", "w"}) {
    int a = *q.find_arc(id);
    for (int k = 1; k < 8; ++k) {
      Point p{a, q.arc(a).length * k / 8};
      CHECK(search_time(q, s1, p) + search_time(q, s2, p) == Rat(17));
    }
  }
}

TEST_CASE("expected time formulas on the circle-with-spike family") {
  for (Rat alpha : {Rat(0), Rat(1, 4), Rat(1, 2)}) {
    RootedNetwork net = circle_spike_network(alpha);
    // P+ goes clockwise first, P- anticlockwise first; both then take the
    // spike and finish with the remaining arc away from A
    PureSearch pplus = steps(net, {"cw", "spike", "ccw'"});
    PureSearch pminus = steps(net, {"ccw", "spike", "cw'"});
    for (Rat p : {Rat(0), Rat(1, 3), Rat(1, 2), Rat(1)}) {
      HiderDistribution nu;
      nu.atoms.push_back({node_point(net, *net.find_node("B")), 1 - p});
      if (p != 0) nu.uniforms.push_back({*net.find_arc("cw"), Rat(0), 1 + alpha, p});
      LotteryStrategy splus(Lottery{{{Rat(1), pplus}}});
      LotteryStrategy sminus(Lottery{{{Rat(1), pminus}}});
      CHECK(expected_time(net, splus, nu) == p * (1 + alpha) / 2 + (1 - p) * (2 + alpha));
      CHECK(expected_time(net, sminus, nu) ==
            p * (2 - alpha + (1 + alpha) / 2) + (1 - p) * (2 - alpha));
    }
  }
}

TEST_CASE("point mass at the root is found immediately") {
  RootedNetwork q = fixture("qbar");
  HiderDistribution nu;
  nu.atoms.push_back({node_point(q, q.root()), Rat(1)});
  LotteryStrategy s(Lottery{{{Rat(1), steps(q, kS1)}}});
  CHECK(expected_time(q, s, nu) == Rat(0));
}

TEST_CASE("max_time on a single arc") {
  RootedNetwork net = RootedNetwork::build("O", {"O", "L"}, {{"a", "O", "L", Rat(1)}});
  LotteryStrategy s(Lottery{{{Rat(1), PureSearch{{{0, false}}}}}});
  auto [t, p] = max_time(net, s, {node_point(net, 1), Point{0, Rat(1, 2)}});
  CHECK(t == Rat(1));
  CHECK(same_point(net, p, node_point(net, 1)));
}

TEST_CASE("reverse and reversibility") {
  RootedNetwork q = fixture("qbar");
  // the block search and its reverse, checked on the block alone
  std::vector<ArcInput> block_arcs;
  RootedNetwork blk = RootedNetwork::build(
      "E", {"E", "F", "M", "G"},
      {{"x", "E", "F", Rat(2)}, {"y", "M", "F", Rat(2)}, {"w", "G", "M", Rat(1)},
       {"z", "E", "G", Rat(1)}});
  PureSearch r = steps(blk, {"x", "y'", "w'", "z'"});
  CHECK(is_valid(blk, r));
  PureSearch rr = reverse_search(r);
  CHECK(rr.steps.size() == 4);
  // reverse is z,w,y,x'
  CHECK(blk.arc(rr.steps[0].arc).id == "z");
  CHECK(!rr.steps[0].rev);
  CHECK(blk.arc(rr.steps[3].arc).id == "x");
  CHECK(rr.steps[3].rev);
  CHECK(is_valid(blk, rr));
  CHECK(is_reversible(blk, r));

  // a single arc: the time-reverse exists but is not a search from the root
  RootedNetwork one = RootedNetwork::build("O", {"O", "L"}, {{"a", "O", "L", Rat(1)}});
  PureSearch fwd{{{0, false}}};
  CHECK(!is_valid(one, reverse_search(fwd)));
  CHECK(is_reversible(one, fwd));  // rooted at the node it starts at

  // circle as two parallel arcs, both searched u->v
  RootedNetwork two = RootedNetwork::build("u", {"u", "v"},
                                           {{"a1", "u", "v", Rat(1)}, {"a2", "u", "v", Rat(1)}});
  PureSearch both{{{0, false}, {1, false}}};
  CHECK(is_reversible(two, both));
}

TEST_CASE("a reversible pair meets every interior point at exactly mu/2") {
  RootedNetwork net = fixture("parallel3");
  Rat mu = total_measure(net);
  // enumerate searches, keep those whose reverse is valid from the root
  for (const PureSearch& s : enumerate_searches(net, 1000)) {
    PureSearch r = reverse_search(s);
    if (!is_valid(net, r)) continue;
    for (int a = 0; a < net.arc_count(); ++a)
      for (int k = 1; k < 4; ++k) {
        Point p{a, net.arc(a).length * k / 4};
        CHECK(search_time(net, s, p) + search_time(net, r, p) == mu);
      }
    // at nodes the sum can only fall short
    CHECK(search_time(net, s, node_point(net, 1)) + search_time(net, r, node_point(net, 1)) <= mu);
  }
}

TEST_CASE("density computations") {
  RootedNetwork q = fixture("qbar");
  HiderDistribution u = uniform_hider(q);
  // any whole-arc region of the uniform distribution has density 1/mu
  for (int a = 0; a < q.arc_count(); ++a)
    CHECK(density(q, u, whole_arcs(q, {a})) == Rat(1, 15));
  CHECK(density(q, u, whole_arcs(q, {0, 1, 7})) == Rat(1, 15));

  Rat alpha(1, 2);
  RootedNetwork cs = circle_spike_network(alpha);
  HiderDistribution nu = cs_hider(alpha);
  Rat pbar = 2 * alpha / (alpha + 2);
  CHECK(density(cs, nu, whole_arcs(cs, {*cs.find_arc("cw")})) == pbar / (1 + alpha));

  RootedNetwork one = RootedNetwork::build("O", {"O", "L"}, {{"a", "O", "L", Rat(1)}});
  HiderDistribution atom;
  atom.atoms.push_back({node_point(one, 1), Rat(1)});
  CHECK(density(one, atom, whole_arcs(one, {0})) == Rat(1));
  CHECK_THROWS_AS(density(one, atom, {}), Error);
}

TEST_CASE("density exchange: searching the denser region first never hurts") {
  // Order swap at the root of random trees: compare A-then-B with B-then-A
  // for the two subtrees hanging at the root.
  int tested = 0;
  for (unsigned long long seed = 1; tested < 60; ++seed) {
    testutil::Rng rng(seed);
    RootedNetwork net = testutil::random_tree(rng, 2 + rng.below(5));
    TreeStructure ts = tree_structure(net);
    if (ts.child_arcs[net.root()].size() != 2) continue;
    HiderDistribution nu = testutil::random_hider(rng, net, true, true);
    int a = ts.child_arcs[net.root()][0], b = ts.child_arcs[net.root()][1];

    // depth-first order of a branch, canonical inside
    std::vector<Step> seq_a, seq_b;
    std::function<void(int, std::vector<Step>&)> dfs = [&](int arc, std::vector<Step>& out) {
      out.push_back({arc, net.arc(arc).v != ts.arc_child[arc]});
      for (int child : ts.child_arcs[ts.arc_child[arc]]) dfs(child, out);
    };
    dfs(a, seq_a);
    dfs(b, seq_b);
    PureSearch ab, ba;
    ab.steps = seq_a;
    ab.steps.insert(ab.steps.end(), seq_b.begin(), seq_b.end());
    ba.steps = seq_b;
    ba.steps.insert(ba.steps.end(), seq_a.begin(), seq_a.end());
    REQUIRE(is_valid(net, ab));
    REQUIRE(is_valid(net, ba));

    std::vector<int> arcs_a, arcs_b;
    for (const Step& st : seq_a) arcs_a.push_back(st.arc);
    for (const Step& st : seq_b) arcs_b.push_back(st.arc);
    Rat rho_a = density(net, nu, whole_arcs(net, arcs_a));
    Rat rho_b = density(net, nu, whole_arcs(net, arcs_b));
    LotteryStrategy sab(Lottery{{{Rat(1), ab}}}), sba(Lottery{{{Rat(1), ba}}});
    Rat tab = expected_time(net, sab, nu), tba = expected_time(net, sba, nu);
    if (rho_a >= rho_b)
      CHECK(tab <= tba);
    else
      CHECK(tba <= tab);
    if (rho_a == rho_b) CHECK(tab == tba);
    ++tested;
  }
  CHECK(tested == 60);
}

TEST_CASE("hider distributions are validated") {
  RootedNetwork q = fixture("qbar");
  HiderDistribution bad;
  bad.atoms.push_back({node_point(q, 1), Rat(1, 2)});
  CHECK_THROWS_AS(validate_hider(q, bad), Error);  // mass 1/2 only
  bad.atoms.push_back({node_point(q, 2), Rat(1, 2)});
  CHECK_NOTHROW(validate_hider(q, bad));
  bad.uniforms.push_back({0, Rat(0), Rat(99), Rat(0)});
  CHECK_THROWS_AS(validate_hider(q, bad), Error);  // segment exceeds the arc
}
