#include "decomposition.hpp"

#include <algorithm>
#include <functional>

namespace expsearch {

namespace {

// Bridges of an undirected multigraph by DFS low-links. Parallel arcs are
// distinguished by arc index, so only a genuinely single connection counts as
// a bridge; loops never do.
std::vector<char> find_bridges(const RootedNetwork& net) {
  int n = net.node_count();
  std::vector<char> bridge(net.arc_count(), 0);
  std::vector<int> disc(n, -1), low(n, 0);
  int timer = 0;

  struct Frame {
    int node;
    int in_arc;
    size_t next = 0;
  };
  std::vector<Frame> stack;
  for (int start = 0; start < n; ++start) {
    if (disc[start] != -1) continue;
    disc[start] = low[start] = timer++;
    stack.push_back({start, -1});
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& inc = net.arcs_at(f.node);
      if (f.next < inc.size()) {
        int ai = inc[f.next++];
        if (ai == f.in_arc) continue;  // the arc we entered through, once
        const Arc& a = net.arc(ai);
        if (a.u == a.v) continue;      // loop
        int w = a.other(f.node);
        if (disc[w] == -1) {
          disc[w] = low[w] = timer++;
          stack.push_back({w, ai});
        } else {
          low[f.node] = std::min(low[f.node], disc[w]);
        }
      } else {
        int child = f.node;
        int via = f.in_arc;
        stack.pop_back();
        if (!stack.empty()) {
          Frame& parent = stack.back();
          low[parent.node] = std::min(low[parent.node], low[child]);
          if (low[child] > disc[parent.node]) bridge[via] = 1;
        }
      }
    }
  }
  return bridge;
}

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

Decomposition decompose(const RootedNetwork& net) {
  Decomposition dec;
  dec.is_bridge = find_bridges(net);
  dec.mu = net.total_measure();
  dec.mu1 = 0;
  for (int i = 0; i < net.arc_count(); ++i)
    if (dec.is_bridge[i]) dec.mu1 += net.arc(i).length;
  dec.mu2 = dec.mu - dec.mu1;

  // components after deleting bridges
  Dsu dsu(net.node_count());
  for (int i = 0; i < net.arc_count(); ++i)
    if (!dec.is_bridge[i]) dsu.unite(net.arc(i).u, net.arc(i).v);

  dec.comp_of_node.assign(net.node_count(), -1);
  std::vector<int> comp_rep;  // representative node per component, in node order
  for (int v = 0; v < net.node_count(); ++v) {
    int r = dsu.find(v);
    if (dec.comp_of_node[r] == -1) {
      dec.comp_of_node[r] = static_cast<int>(comp_rep.size());
      comp_rep.push_back(r);
    }
    dec.comp_of_node[v] = dec.comp_of_node[r];
  }
  int n_comp = static_cast<int>(comp_rep.size());

  // blocks: group non-bridge arcs by component, ordered by first arc
  dec.block_of_arc.assign(net.arc_count(), -1);
  std::vector<int> comp_block(n_comp, -1);
  for (int i = 0; i < net.arc_count(); ++i) {
    if (dec.is_bridge[i]) continue;
    int c = dec.comp_of_node[net.arc(i).u];
    if (comp_block[c] == -1) {
      comp_block[c] = static_cast<int>(dec.blocks.size());
      dec.blocks.emplace_back();
    }
    dec.block_of_arc[i] = comp_block[c];
    dec.blocks[comp_block[c]].push_back(i);
  }
  dec.comp_block = comp_block;
  dec.comp_root_node.assign(n_comp, -1);
  for (int c = 0; c < n_comp; ++c)
    if (comp_block[c] == -1) dec.comp_root_node[c] = comp_rep[c];

  // bridge tree: one node per component, arcs = bridges
  std::vector<std::string> tree_nodes(n_comp);
  int new_counter = 0;
  auto unique_name = [&net](std::string base) {
    while (net.find_node(base)) base += "'";
    return base;
  };
  for (int c = 0; c < n_comp; ++c) {
    if (comp_block[c] >= 0)
      tree_nodes[c] = unique_name("N" + std::to_string(new_counter++));
    else
      tree_nodes[c] = net.node_name(comp_rep[c]);
  }
  std::vector<ArcInput> tree_arcs;
  for (int i = 0; i < net.arc_count(); ++i) {
    if (!dec.is_bridge[i]) continue;
    const Arc& a = net.arc(i);
    tree_arcs.push_back({a.id, tree_nodes[dec.comp_of_node[a.u]],
                         tree_nodes[dec.comp_of_node[a.v]], a.length});
  }
  int root_comp = dec.comp_of_node[net.root()];
  dec.bridge_tree = RootedNetwork::build(tree_nodes[root_comp], tree_nodes, tree_arcs);
  dec.comp_tree_node.resize(n_comp);
  for (int c = 0; c < n_comp; ++c) dec.comp_tree_node[c] = *dec.bridge_tree.find_node(tree_nodes[c]);

  // root the component tree and compute heights
  dec.comp_parent.assign(n_comp, -1);
  dec.comp_parent_bridge.assign(n_comp, -1);
  dec.comp_height.assign(n_comp, Rat(0));
  dec.bridge_parent_node.assign(net.arc_count(), -1);
  dec.child_bridges_at_node.assign(net.node_count(), {});
  std::vector<char> seen(n_comp, 0);
  seen[root_comp] = 1;
  std::vector<int> order = {root_comp};
  // node -> incident bridges, canonical order
  std::vector<std::vector<int>> bridges_at(net.node_count());
  for (int i = 0; i < net.arc_count(); ++i) {
    if (!dec.is_bridge[i]) continue;
    bridges_at[net.arc(i).u].push_back(i);
    bridges_at[net.arc(i).v].push_back(i);
  }
  for (size_t k = 0; k < order.size(); ++k) {
    int c = order[k];
    // scan nodes of this component in canonical order
    for (int v = 0; v < net.node_count(); ++v) {
      if (dec.comp_of_node[v] != c) continue;
      for (int bi : bridges_at[v]) {
        const Arc& b = net.arc(bi);
        int w = b.other(v);
        int cw = dec.comp_of_node[w];
        if (seen[cw]) continue;
        seen[cw] = 1;
        dec.comp_parent[cw] = c;
        dec.comp_parent_bridge[cw] = bi;
        dec.comp_height[cw] = dec.comp_height[c] + b.length;
        dec.bridge_parent_node[bi] = v;
        dec.child_bridges_at_node[v].push_back(bi);
        order.push_back(cw);
      }
    }
  }

  // gateways: where each block is entered from the root side
  dec.gateway.assign(dec.blocks.size(), -1);
  for (int c = 0; c < n_comp; ++c) {
    int b = comp_block[c];
    if (b < 0) continue;
    if (c == root_comp) {
      dec.gateway[b] = net.root();
    } else {
      const Arc& pb = net.arc(dec.comp_parent_bridge[c]);
      int pn = dec.bridge_parent_node[dec.comp_parent_bridge[c]];
      dec.gateway[b] = pb.other(pn);
    }
  }
  return dec;
}

Rat Decomposition::height(const RootedNetwork& net, const Point& p) const {
  if (auto n = point_node(net, p)) return comp_height[comp_of_node[*n]];
  const Arc& a = net.arc(p.arc);
  if (!is_bridge[p.arc]) return comp_height[comp_of_node[a.u]];
  int pn = bridge_parent_node[p.arc];
  Rat along = (pn == a.u) ? p.offset : a.length - p.offset;
  return comp_height[comp_of_node[pn]] + along;
}

Rat Decomposition::network_height() const {
  Rat best = 0;
  for (const Rat& h : comp_height) best = std::max(best, h);
  return best;
}

Rat Decomposition::bridge_ratio() const {
  if (mu == 0) throw Error(Errc::zero_length, "empty network has no bridge ratio");
  return mu1 / mu;
}

std::vector<int> Decomposition::leaf_components() const {
  int n_comp = static_cast<int>(comp_height.size());
  std::vector<int> child_count(n_comp, 0);
  for (int c = 0; c < n_comp; ++c)
    if (comp_parent[c] >= 0) child_count[comp_parent[c]]++;
  std::vector<int> leaves;
  for (int c = 0; c < n_comp; ++c)
    if (child_count[c] == 0 && comp_parent[c] >= 0) leaves.push_back(c);
  return leaves;
}

int Decomposition::comp_entry_node(int comp) const {
  if (comp_block[comp] >= 0) return gateway[comp_block[comp]];
  return comp_root_node[comp];
}

}  // namespace expsearch
