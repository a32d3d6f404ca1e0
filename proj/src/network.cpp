#include "network.hpp"

#include <algorithm>

namespace expsearch {

RootedNetwork RootedNetwork::build(const std::string& root, const std::vector<std::string>& nodes,
                                   const std::vector<ArcInput>& arcs) {
  RootedNetwork net;
  net.root_name_ = root;
  for (const auto& name : nodes) {
    if (net.node_index_.count(name))
      throw Error(Errc::parse, "node '" + name + "' declared twice");
    net.node_index_[name] = static_cast<int>(net.node_names_.size());
    net.node_names_.push_back(name);
  }
  auto node_of = [&net](const std::string& name, const std::string& arc_id) {
    auto it = net.node_index_.find(name);
    if (it == net.node_index_.end())
      throw Error(Errc::parse, "arc '" + arc_id + "' references unknown node '" + name + "'");
    return it->second;
  };
  for (const auto& in : arcs) {
    Arc a;
    a.id = in.id;
    a.u = node_of(in.u, in.id);
    a.v = node_of(in.v, in.id);
    a.length = in.length;
    auto [it, fresh] = net.arc_index_.emplace(a.id, static_cast<int>(net.arcs_.size()));
    if (!fresh && net.duplicate_arc_id_.empty()) net.duplicate_arc_id_ = a.id;
    net.arcs_.push_back(std::move(a));
  }
  if (auto it = net.node_index_.find(root); it != net.node_index_.end()) net.root_ = it->second;
  net.incidence_.assign(net.node_names_.size(), {});
  for (int i = 0; i < net.arc_count(); ++i) {
    const Arc& a = net.arcs_[i];
    net.incidence_[a.u].push_back(i);
    if (a.v != a.u) net.incidence_[a.v].push_back(i);
  }
  return net;
}

std::optional<int> RootedNetwork::find_node(const std::string& name) const {
  auto it = node_index_.find(name);
  if (it == node_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> RootedNetwork::find_arc(const std::string& id) const {
  auto it = arc_index_.find(id);
  if (it == arc_index_.end()) return std::nullopt;
  return it->second;
}

Rat RootedNetwork::total_measure() const {
  Rat sum = 0;
  for (const Arc& a : arcs_) sum += a.length;
  return sum;
}

void validate(const RootedNetwork& net) {
  if (net.has_duplicate_arc_id())
    throw Error(Errc::duplicate_arc_id, "arc id '" + net.duplicate_arc_id() + "' is not unique");
  if (net.root() < 0)
    throw Error(Errc::missing_root, "root node '" + net.root_name() + "' is not declared");
  for (const Arc& a : net.arcs())
    if (a.length <= 0)
      throw Error(Errc::nonpositive_length, "arc '" + a.id + "' has length " + rat_str(a.length));
  // connectivity over the undirected multigraph
  std::vector<char> seen(net.node_count(), 0);
  std::vector<int> stack = {net.root()};
  seen[net.root()] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int ai : net.arcs_at(v)) {
      int w = net.arc(ai).other(v);
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  for (int v = 0; v < net.node_count(); ++v)
    if (!seen[v])
      throw Error(Errc::disconnected, "node '" + net.node_name(v) + "' is unreachable from the root");
}

Rat total_measure(const RootedNetwork& net) { return net.total_measure(); }

std::optional<int> point_node(const RootedNetwork& net, const Point& p) {
  const Arc& a = net.arc(p.arc);
  if (p.offset == 0) return a.u;
  if (p.offset == a.length) return a.v;
  return std::nullopt;
}

Point node_point(const RootedNetwork& net, int node) {
  const auto& inc = net.arcs_at(node);
  if (inc.empty()) throw Error(Errc::bad_argument, "isolated node has no point representation");
  int ai = inc.front();
  const Arc& a = net.arc(ai);
  return Point{ai, a.u == node ? Rat(0) : a.length};
}

bool same_point(const RootedNetwork& net, const Point& a, const Point& b) {
  auto na = point_node(net, a);
  auto nb = point_node(net, b);
  if (na && nb) return *na == *nb;
  if (na || nb) return false;
  return a.arc == b.arc && a.offset == b.offset;
}

std::string point_str(const RootedNetwork& net, const Point& p) {
  if (auto n = point_node(net, p)) return net.node_name(*n);
  return net.arc(p.arc).id + "@" + rat_str(p.offset);
}

RootedNetwork subdivide(const RootedNetwork& net, const Point& p) {
  if (p.arc < 0 || p.arc >= net.arc_count()) throw Error(Errc::bad_argument, "point on unknown arc");
  const Arc& a = net.arc(p.arc);
  if (p.offset <= 0 || p.offset >= a.length)
    throw Error(Errc::point_is_node, "offset " + rat_str(p.offset) + " on arc '" + a.id +
                                         "' is an endpoint");
  std::string new_node = a.id + "@" + rat_str(p.offset);
  std::vector<std::string> nodes;
  nodes.reserve(net.node_count() + 1);
  for (int v = 0; v < net.node_count(); ++v) nodes.push_back(net.node_name(v));
  nodes.push_back(new_node);
  std::vector<ArcInput> arcs;
  arcs.reserve(net.arc_count() + 1);
  for (int i = 0; i < net.arc_count(); ++i) {
    const Arc& b = net.arc(i);
    if (i == p.arc) {
      arcs.push_back({b.id + "#0", net.node_name(b.u), new_node, p.offset});
      arcs.push_back({b.id + "#1", new_node, net.node_name(b.v), b.length - p.offset});
    } else {
      arcs.push_back({b.id, net.node_name(b.u), net.node_name(b.v), b.length});
    }
  }
  return RootedNetwork::build(net.root_name(), nodes, arcs);
}

}  // namespace expsearch
