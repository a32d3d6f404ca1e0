#include "bounds.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "bridge_strategy.hpp"
#include "tree_game.hpp"

namespace expsearch {

Rat pruning_bound(const Rat& mu, const Rat& pi) {
  if (pi < 0 || pi > mu) throw Error(Errc::out_of_range, "need 0 <= pi <= mu");
  return (mu * mu + pi * pi) / (2 * mu);
}

RootedNetwork build_q_prime(const RootedNetwork& net, const Decomposition& dec) {
  const RootedNetwork& bt = dec.bridge_tree;
  std::vector<std::string> nodes;
  for (int v = 0; v < bt.node_count(); ++v) nodes.push_back(bt.node_name(v));
  std::vector<ArcInput> arcs;
  for (int a = 0; a < net.arc_count(); ++a) {
    const Arc& arc = net.arc(a);
    if (dec.is_bridge[a]) {
      arcs.push_back({arc.id, bt.node_name(dec.comp_tree_node[dec.comp_of_node[arc.u]]),
                      bt.node_name(dec.comp_tree_node[dec.comp_of_node[arc.v]]), arc.length});
    } else {
      arcs.push_back({arc.id, bt.root_name(), bt.root_name(), arc.length});
    }
  }
  return RootedNetwork::build(bt.root_name(), nodes, arcs);
}

RootedNetwork build_q_double_prime(const RootedNetwork& net, const Decomposition& dec) {
  const RootedNetwork& bt = dec.bridge_tree;
  // canonically first leaf component attaining the height
  Rat pi = dec.network_height();
  int target = -1;
  for (int c = 0; c < static_cast<int>(dec.comp_height.size()) && target < 0; ++c)
    if (dec.comp_height[c] == pi && dec.comp_parent[c] >= 0) target = c;
  std::set<int> on_path;
  if (target >= 0)
    for (int c = target; c >= 0; c = dec.comp_parent[c]) on_path.insert(c);

  std::vector<std::string> nodes;
  for (int v = 0; v < bt.node_count(); ++v) nodes.push_back(bt.node_name(v));
  std::vector<ArcInput> arcs;
  for (int a = 0; a < net.arc_count(); ++a) {
    const Arc& arc = net.arc(a);
    if (!dec.is_bridge[a]) {
      arcs.push_back({arc.id, bt.root_name(), bt.root_name(), arc.length});
      continue;
    }
    // child component hanging below this bridge
    int cu = dec.comp_of_node[arc.u], cv = dec.comp_of_node[arc.v];
    int child = (dec.comp_parent_bridge[cu] == a) ? cu : cv;
    int parent = dec.comp_parent[child];
    std::string pname = bt.node_name(dec.comp_tree_node[parent]);
    if (!on_path.count(child) && on_path.count(parent) && dec.comp_parent[parent] >= 0)
      pname = bt.root_name();  // subtree hanging off the path interior moves to the root
    arcs.push_back({arc.id, pname, bt.node_name(dec.comp_tree_node[child]), arc.length});
  }
  return RootedNetwork::build(bt.root_name(), nodes, arcs);
}

HiderDistribution pushed_uniform(const RootedNetwork& net, const Decomposition& dec) {
  HiderDistribution h;
  for (int a = 0; a < net.arc_count(); ++a) {
    if (dec.is_bridge[a]) continue;
    const Arc& arc = net.arc(a);
    h.uniforms.push_back({a, Rat(0), arc.length, arc.length / dec.mu});
  }
  if (dec.bridge_tree.arc_count() > 0) {
    Rat scale = dec.mu1 / dec.mu;
    auto leaf_masses = ebd(dec.bridge_tree);
    // map bridge-tree leaves back to components, then to network points
    std::vector<int> comp_of_tree_node(dec.bridge_tree.node_count(), -1);
    for (size_t c = 0; c < dec.comp_tree_node.size(); ++c)
      comp_of_tree_node[dec.comp_tree_node[c]] = static_cast<int>(c);
    for (const auto& [tree_leaf, mass] : leaf_masses) {
      int comp = comp_of_tree_node[tree_leaf];
      int node = dec.comp_entry_node(comp);
      h.atoms.push_back({node_point(net, node), scale * mass});
    }
  }
  return h;
}

Rat pushed_uniform_bound(const RootedNetwork&, const Decomposition& dec) {
  return (dec.mu + dec.bridge_ratio() * bridge_tree_distance(dec)) / 2;
}

double factor_f(double r) {
  if (r < 0 || r > 1) throw Error(Errc::out_of_range, "bridge ratio outside [0,1]");
  return (1 + r) / (1 + r * r);
}

double factor_g(double r) {
  if (r < 0 || r > 1) throw Error(Errc::out_of_range, "bridge ratio outside [0,1]");
  return 2 / (1 + r * r);
}

double factor_cap() { return (1 + std::sqrt(2.0)) / 2; }
double breakpoint_f() { return std::sqrt(2.0) - 1; }
double breakpoint_g() { return std::sqrt((3 - std::sqrt(2.0)) / (1 + std::sqrt(2.0))); }

double combined_factor(double r) {
  if (r < 0 || r > 1) throw Error(Errc::out_of_range, "bridge ratio outside [0,1]");
  if (r <= breakpoint_f()) return factor_f(r);
  if (r <= breakpoint_g()) return factor_cap();
  return factor_g(r);
}

std::vector<CurveRow> bound_curve(double step) {
  if (!(step > 0)) throw Error(Errc::bad_argument, "step must be positive");
  std::vector<double> grid;
  for (double r = 0; r < 1 + step / 2; r += step) grid.push_back(std::min(r, 1.0));
  grid.push_back(breakpoint_f());
  grid.push_back(breakpoint_g());
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  std::vector<CurveRow> rows;
  rows.reserve(grid.size());
  for (double r : grid) rows.push_back({r, factor_f(r), factor_g(r), combined_factor(r)});
  return rows;
}

double beta_factor(const Decomposition& dec) {
  double x = rat_double(dec.network_height() / dec.mu);
  return std::min(factor_f(x), factor_cap());
}

BoundsReport bounds_report(const RootedNetwork&, const Decomposition& dec) {
  BoundsReport b;
  Rat pi = dec.network_height();
  b.uniform_lb = dec.mu / 2;
  b.pruning_lb = pruning_bound(dec.mu, pi);
  b.pushed_uniform_lb = (dec.mu + dec.bridge_ratio() * bridge_tree_distance(dec)) / 2;
  b.beta_ub = (dec.mu + pi) / 2;
  b.gamma_ub = gamma_upper_bound(dec);
  b.r = dec.bridge_ratio();
  b.pi = pi;
  b.factor_gamma = gamma_factor(dec);
  b.factor_beta = beta_factor(dec);
  b.combined = combined_factor(rat_double(b.r));
  return b;
}

}  // namespace expsearch
