#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "rational.hpp"

namespace expsearch {

// Undirected multigraph with positive arc lengths and a distinguished root.
// Loops and parallel arcs are allowed. The order of arcs (and nodes) as given
// at construction is the canonical order used for every deterministic
// tie-break downstream.

struct Arc {
  std::string id;
  int u = -1;
  int v = -1;
  Rat length;

  int other(int node) const { return node == u ? v : u; }
};

struct ArcInput {
  std::string id;
  std::string u;
  std::string v;
  Rat length;
};

class RootedNetwork {
 public:
  RootedNetwork() = default;

  // Node names are introduced in order; arc endpoints must refer to declared
  // nodes. A missing root or duplicate arc id is recorded and reported by
  // validate(), not here, so that files can be inspected before validation.
  static RootedNetwork build(const std::string& root, const std::vector<std::string>& nodes,
                             const std::vector<ArcInput>& arcs);

  int node_count() const { return static_cast<int>(node_names_.size()); }
  int arc_count() const { return static_cast<int>(arcs_.size()); }
  const std::string& node_name(int v) const { return node_names_[v]; }
  const Arc& arc(int a) const { return arcs_[a]; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  int root() const { return root_; }
  const std::string& root_name() const { return root_name_; }

  std::optional<int> find_node(const std::string& name) const;
  std::optional<int> find_arc(const std::string& id) const;

  // Arcs incident to a node, canonical order; loops appear once.
  const std::vector<int>& arcs_at(int node) const { return incidence_[node]; }

  Rat total_measure() const;

  bool has_duplicate_arc_id() const { return !duplicate_arc_id_.empty(); }
  const std::string& duplicate_arc_id() const { return duplicate_arc_id_; }

 private:
  std::vector<std::string> node_names_;
  std::vector<Arc> arcs_;
  int root_ = -1;
  std::string root_name_;
  std::string duplicate_arc_id_;
  std::map<std::string, int> node_index_;
  std::map<std::string, int> arc_index_;
  std::vector<std::vector<int>> incidence_;
};

// A point on the network: offset along an arc, measured from endpoint u.
// Offsets 0 and length(arc) are identified with the endpoint nodes.
struct Point {
  int arc = -1;
  Rat offset;
};

// Throws the first violated invariant: DuplicateArcId, MissingRoot,
// NonpositiveLength, Disconnected.
void validate(const RootedNetwork& net);

Rat total_measure(const RootedNetwork& net);

// The node a point coincides with, if any.
std::optional<int> point_node(const RootedNetwork& net, const Point& p);

// Canonical point for a node: offset 0/length on its first incident arc.
Point node_point(const RootedNetwork& net, int node);

bool same_point(const RootedNetwork& net, const Point& a, const Point& b);

std::string point_str(const RootedNetwork& net, const Point& p);

// Promotes an interior point to a node named "<arc>@<offset>"; the arc is
// replaced in place by "<arc>#0" and "<arc>#1" so canonical order is kept.
// Throws PointIsNode when the offset is 0 or the full length.
RootedNetwork subdivide(const RootedNetwork& net, const Point& p);

}  // namespace expsearch
