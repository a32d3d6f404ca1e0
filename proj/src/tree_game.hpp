#pragma once

#include <memory>
#include <vector>

#include "search.hpp"

namespace expsearch {

// Rooted orientation of a tree network with branch measures and EBD data.
struct TreeStructure {
  std::vector<int> parent_arc;    // per node, -1 at root
  std::vector<int> parent_node;   // per node, -1 at root
  std::vector<std::vector<int>> child_arcs;  // per node, canonical order
  std::vector<int> arc_child;     // per arc: endpoint away from the root
  std::vector<Rat> depth;         // per node: distance from root
  std::vector<Rat> branch_mu;     // per arc: length of the branch it roots
  std::vector<Rat> branch_D;      // per arc: EBD-average root-to-leaf distance of the branch
  std::vector<int> leaves;        // node indices, canonical order
};

// Throws NotATree unless the validated network is a tree.
TreeStructure tree_structure(const RootedNetwork& net);

// Equal Branch Density distribution over the leaves: at every branch node all
// branches carry the same hider density, so mass splits in proportion to
// branch length.
std::vector<std::pair<int, Rat>> ebd(const RootedNetwork& net);

// D(Q) = sum_i e(i) d(O, i).
Rat ebd_distance(const RootedNetwork& net);

// Game value on a tree: (mu + D) / 2.
Rat tree_value(const RootedNetwork& net);

// Biased depth-first searcher strategy. A k-ary branch node is handled as the
// limit of the binary splits {c_i} vs {c_{i+1},...}, with virtual connecting
// arcs of length zero, so all probabilities stay exact.
class BiasedDfs : public Strategy {
 public:
  BiasedDfs(const RootedNetwork& net, TreeStructure ts);

  Rat time_to(const RootedNetwork& net, const Point& h) const override;

  // Probability that a given outward arc's branch is searched first at its
  // branch node; per node these sum to 1.
  const std::vector<std::pair<int, Rat>>& first_probs_at(int node) const {
    return first_probs_[node];
  }

  // Probability that branch `a` is searched before sibling branch `b`.
  Rat prob_before(int node, int arc_a, int arc_b) const;

  const TreeStructure& structure() const { return ts_; }

 private:
  TreeStructure ts_;
  std::vector<std::vector<Rat>> stage_prob_;  // per node: q_i of split i
  std::vector<std::vector<std::pair<int, Rat>>> first_probs_;
};

std::shared_ptr<BiasedDfs> biased_dfs(const RootedNetwork& net);

struct TreeGameSolution {
  std::vector<std::pair<int, Rat>> ebd;  // leaf node -> probability
  Rat D;
  Rat value;  // (mu + D) / 2
  std::shared_ptr<BiasedDfs> searcher;
};

TreeGameSolution solve_tree_game(const RootedNetwork& net);

// Optimal expanding search against a known hider distribution on a tree,
// found by highest-density merging under tree precedence. Interior atoms and
// segment endpoints are promoted to nodes first, so the reported search lives
// on the returned (possibly subdivided) network.
struct BayesResult {
  RootedNetwork net;
  PureSearch search;
  Rat value;
};

BayesResult bayes_tree_search(const RootedNetwork& net, const HiderDistribution& hider);

}  // namespace expsearch
