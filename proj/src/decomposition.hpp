#pragma once

#include <vector>

#include "network.hpp"

namespace expsearch {

// Bridge/block partition of a validated network, with the bridge tree, the
// height function and the bridge ratio.
//
// Components are the connected pieces left after deleting all bridges. A
// component holding at least one non-bridge arc is a block and is shrunk to a
// single "new node" of the bridge tree; a component that is a lone node
// (incident only to bridges) keeps its original name.
struct Decomposition {
  std::vector<char> is_bridge;             // per arc
  std::vector<std::vector<int>> blocks;    // arc indices, canonical order
  std::vector<int> block_of_arc;           // -1 for bridges
  std::vector<int> comp_of_node;           // component index per node
  std::vector<int> comp_block;             // component -> block index, -1 if original node
  std::vector<int> comp_root_node;         // original node for node components, else -1

  RootedNetwork bridge_tree;               // nodes = components, arcs = bridges
  std::vector<int> comp_tree_node;         // component -> bridge_tree node

  // Rooted structure over components (bridge_tree is a tree).
  std::vector<int> comp_parent;            // parent component, -1 at root
  std::vector<int> comp_parent_bridge;     // arc index of parent bridge, -1 at root
  std::vector<Rat> comp_height;            // distance from root component

  std::vector<int> bridge_parent_node;     // per arc: root-side endpoint of a bridge, -1 otherwise
  std::vector<std::vector<int>> child_bridges_at_node;  // per node, canonical order
  std::vector<int> gateway;                // per block: node where the search enters it

  Rat mu;    // total length
  Rat mu1;   // bridge length
  Rat mu2;   // block length

  Rat height(const RootedNetwork& net, const Point& p) const;
  Rat network_height() const;
  Rat bridge_ratio() const;  // mu1 / mu

  // Leaf components of the bridge tree other than the root component.
  std::vector<int> leaf_components() const;

  // Q-node standing for a component: the original node itself, or the
  // gateway node of a block.
  int comp_entry_node(int comp) const;
};

Decomposition decompose(const RootedNetwork& net);

}  // namespace expsearch
