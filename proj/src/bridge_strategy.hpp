#pragma once

#include <memory>
#include <vector>

#include "decomposition.hpp"
#include "search.hpp"
#include "tree_game.hpp"

namespace expsearch {

// Bridge-optimal strategy: biased depth-first on the bridge tree, with each
// block exhausted by its fixed entry search the moment it is first reached.
// Expected reach times are computed by the tree recursion, never by expanding
// the lottery: off-path branches count their full hanging length (bridges
// plus blocks) weighted by the branch order probabilities of the tree rule.
class GammaStrategy : public Strategy {
 public:
  GammaStrategy(const RootedNetwork& net, Decomposition dec);

  Rat time_to(const RootedNetwork& net, const Point& h) const override;

  const Decomposition& decomposition() const { return dec_; }
  const std::vector<PureSearch>& block_searches() const { return block_search_; }

  // Branch probabilities of the tree rule, as (bridge-tree node, bridge arc
  // id, probability that branch is searched first).
  const BiasedDfs* tree_rule() const { return tree_rule_.get(); }

  // Total hanging length (bridges and blocks) of the branch rooted by a
  // bridge, in original-network terms.
  const std::vector<Rat>& branch_load() const { return branch_load_; }

 private:
  Decomposition dec_;
  std::shared_ptr<BiasedDfs> tree_rule_;  // null when the bridge tree is a point
  std::vector<PureSearch> block_search_;  // per block, from its gateway
  std::vector<Rat> block_mu_;
  std::vector<Rat> arc_length_;
  std::vector<Rat> branch_load_;          // per net arc, bridges only
  std::vector<int> tree_arc_of_bridge_;   // net arc -> bridge_tree arc
  std::vector<int> net_arc_of_tree_arc_;  // inverse
  std::vector<int> tree_node_of_comp_;

  Rat expected_bridge_completion(int comp) const;  // parent bridge of comp done
  Rat path_cost_to_comp_node(int comp) const;      // reach the comp's tree node
};

GammaStrategy build_gamma(const RootedNetwork& net, const Decomposition& dec);

// mu2 + (mu1 + D(Q^t)) / 2; D(Q^t) is zero when there are no bridges.
Rat gamma_upper_bound(const Decomposition& dec);

// 2 / (1 + r^2).
Rat gamma_factor(const Decomposition& dec);

Rat bridge_tree_distance(const Decomposition& dec);  // D(Q^t)

}  // namespace expsearch
