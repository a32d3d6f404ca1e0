#include "bridge_strategy.hpp"

#include <algorithm>

#include "block_strategy.hpp"

namespace expsearch {

namespace {

// Reach time of a point within a partial step sequence; the point must be
// covered by it.
Rat time_in_trail(const RootedNetwork& net, const std::vector<Step>& steps, const Point& h,
                  int start_node) {
  auto node = point_node(net, h);
  if (node && *node == start_node) return 0;
  Rat t = 0;
  for (const Step& st : steps) {
    const Rat& len = net.arc(st.arc).length;
    if (node) {
      if (st.from(net) == *node) return t;
      if (st.to(net) == *node) return t + len;
    } else if (st.arc == h.arc) {
      return t + (st.rev ? len - h.offset : h.offset);
    }
    t += len;
  }
  throw Error(Errc::internal, "trail does not cover the point");
}

}  // namespace

GammaStrategy::GammaStrategy(const RootedNetwork& net, Decomposition dec) : dec_(std::move(dec)) {
  arc_length_.reserve(net.arc_count());
  for (int a = 0; a < net.arc_count(); ++a) arc_length_.push_back(net.arc(a).length);
  block_search_.resize(dec_.blocks.size());
  block_mu_.resize(dec_.blocks.size());
  for (size_t b = 0; b < dec_.blocks.size(); ++b) {
    block_search_[b] = reversible_block_search(net, dec_.blocks[b], dec_.gateway[b]);
    Rat mu = 0;
    for (int a : dec_.blocks[b]) mu += net.arc(a).length;
    block_mu_[b] = mu;
  }
  if (dec_.bridge_tree.arc_count() > 0)
    tree_rule_ = std::make_shared<BiasedDfs>(dec_.bridge_tree, tree_structure(dec_.bridge_tree));

  tree_arc_of_bridge_.assign(net.arc_count(), -1);
  net_arc_of_tree_arc_.assign(dec_.bridge_tree.arc_count(), -1);
  for (int a = 0; a < net.arc_count(); ++a)
    if (dec_.is_bridge[a]) {
      int ta = *dec_.bridge_tree.find_arc(net.arc(a).id);
      tree_arc_of_bridge_[a] = ta;
      net_arc_of_tree_arc_[ta] = a;
    }
  tree_node_of_comp_ = dec_.comp_tree_node;

  // hanging load per bridge: bridge lengths plus block measures in its branch
  int n_comp = static_cast<int>(dec_.comp_height.size());
  std::vector<Rat> comp_load(n_comp, Rat(0));
  for (int c = 0; c < n_comp; ++c)
    if (dec_.comp_block[c] >= 0) comp_load[c] = block_mu_[dec_.comp_block[c]];
  branch_load_.assign(net.arc_count(), Rat(0));
  // process components deepest-first (children before parents)
  std::vector<int> order(n_comp);
  for (int c = 0; c < n_comp; ++c) order[c] = c;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return dec_.comp_height[a] > dec_.comp_height[b];
  });
  std::vector<Rat> subtree = comp_load;
  for (int c : order) {
    if (dec_.comp_parent[c] < 0) continue;
    int pb = dec_.comp_parent_bridge[c];
    branch_load_[pb] = net.arc(pb).length + subtree[c];
    subtree[dec_.comp_parent[c]] += branch_load_[pb];
  }
}

Rat GammaStrategy::path_cost_to_comp_node(int comp) const {
  // Expected time to finish the parent bridge of `comp`: bridges along the
  // path, blocks exhausted on the way, and off-path branches weighted by the
  // tree-rule order probabilities.
  Rat t = 0;
  int c = comp;
  while (true) {
    int parent = dec_.comp_parent[c];
    if (parent < 0) break;
    int pb = dec_.comp_parent_bridge[c];
    t += arc_length_[pb];
    // exhausting the parent component's block happens before leaving it
    if (dec_.comp_block[parent] >= 0) t += block_mu_[dec_.comp_block[parent]];
    // siblings at the parent tree node that may be searched first
    int tn = tree_node_of_comp_[parent];
    int down = tree_arc_of_bridge_[pb];
    for (int sib : tree_rule_->structure().child_arcs[tn]) {
      if (sib == down) continue;
      t += branch_load_[net_arc_of_tree_arc_[sib]] * tree_rule_->prob_before(tn, sib, down);
    }
    c = parent;
  }
  return t;
}

Rat GammaStrategy::expected_bridge_completion(int comp) const { return path_cost_to_comp_node(comp); }

Rat GammaStrategy::time_to(const RootedNetwork& net, const Point& h) const {
  auto node = point_node(net, h);
  if (node && *node == net.root()) return 0;

  if (!node && !dec_.is_bridge[h.arc]) {
    // inside a block: reached during that block's exhaustion run
    int blk = dec_.block_of_arc[h.arc];
    int comp = dec_.comp_of_node[net.arc(h.arc).u];
    Rat start = (dec_.comp_parent[comp] < 0) ? Rat(0) : expected_bridge_completion(comp);
    return start + time_in_trail(net, block_search_[blk].steps, h, dec_.gateway[blk]);
  }
  if (node) {
    int comp = dec_.comp_of_node[*node];
    if (dec_.comp_block[comp] >= 0) {
      int blk = dec_.comp_block[comp];
      Rat start = (dec_.comp_parent[comp] < 0) ? Rat(0) : expected_bridge_completion(comp);
      return start + time_in_trail(net, block_search_[blk].steps, h, dec_.gateway[blk]);
    }
    // original node: found when its parent bridge completes
    return expected_bridge_completion(comp);
  }
  // interior of a bridge: child side determines the path, partial length at the end
  const Arc& a = net.arc(h.arc);
  int pn = dec_.bridge_parent_node[h.arc];
  Rat along = (pn == a.u) ? h.offset : a.length - h.offset;
  // component on the far side of this bridge
  int child_comp = dec_.comp_of_node[a.other(pn)];
  return expected_bridge_completion(child_comp) - a.length + along;
}

GammaStrategy build_gamma(const RootedNetwork& net, const Decomposition& dec) {
  return GammaStrategy(net, dec);
}

Rat bridge_tree_distance(const Decomposition& dec) {
  if (dec.bridge_tree.arc_count() == 0) return 0;
  return ebd_distance(dec.bridge_tree);
}

Rat gamma_upper_bound(const Decomposition& dec) {
  return dec.mu2 + (dec.mu1 + bridge_tree_distance(dec)) / 2;
}

Rat gamma_factor(const Decomposition& dec) {
  Rat r = dec.bridge_ratio();
  return Rat(2) / (1 + r * r);
}

}  // namespace expsearch
