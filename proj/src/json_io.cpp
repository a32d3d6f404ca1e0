#include "json_io.hpp"

#include <sstream>

namespace expsearch {

json rat_json(const Rat& value) {
  return json{{"exact", rat_str(value)}, {"approx", rat_double(value)}};
}

Rat rat_from_json(const json& j) {
  if (j.is_string()) return rat_parse(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long long>());
  if (j.is_number_float()) {
    // exact value of the double; "p/q" strings are the lossless route
    return Rat(j.get<double>());
  }
  if (j.is_object() && j.contains("exact")) return rat_parse(j["exact"].get<std::string>());
  throw Error(Errc::parse, "expected a number or \"p/q\" string, got " + j.dump());
}

RootedNetwork network_from_json(const json& j) {
  if (!j.is_object() || !j.contains("root") || !j.contains("nodes") || !j.contains("arcs"))
    throw Error(Errc::parse, "network JSON needs root, nodes and arcs");
  std::vector<std::string> nodes;
  for (const auto& n : j["nodes"]) nodes.push_back(n.get<std::string>());
  std::vector<ArcInput> arcs;
  for (const auto& a : j["arcs"]) {
    if (!a.contains("id") || !a.contains("u") || !a.contains("v") || !a.contains("length"))
      throw Error(Errc::parse, "arc entries need id, u, v, length");
    arcs.push_back({a["id"].get<std::string>(), a["u"].get<std::string>(),
                    a["v"].get<std::string>(), rat_from_json(a["length"])});
  }
  return RootedNetwork::build(j["root"].get<std::string>(), nodes, arcs);
}

json network_to_json(const RootedNetwork& net) {
  json arcs = json::array();
  for (const Arc& a : net.arcs())
    arcs.push_back({{"id", a.id},
                    {"u", net.node_name(a.u)},
                    {"v", net.node_name(a.v)},
                    {"length", rat_str(a.length)}});
  json nodes = json::array();
  for (int v = 0; v < net.node_count(); ++v) nodes.push_back(net.node_name(v));
  return json{{"root", net.root_name()}, {"nodes", nodes}, {"arcs", arcs}};
}

std::string network_to_dot(const RootedNetwork& net) {
  std::ostringstream out;
  out << "graph expsearch {\n";
  for (int v = 0; v < net.node_count(); ++v) {
    out << "  \"" << net.node_name(v) << "\"";
    if (v == net.root()) out << " [shape=doublecircle]";
    out << ";\n";
  }
  for (const Arc& a : net.arcs())
    out << "  \"" << net.node_name(a.u) << "\" -- \"" << net.node_name(a.v) << "\" [label=\""
        << a.id << " (" << rat_str(a.length) << ")\"];\n";
  out << "}\n";
  return out.str();
}

namespace {

Step step_from_json(const RootedNetwork& net, const json& j) {
  if (!j.is_array() || j.size() != 2)
    throw Error(Errc::parse, "a step is [\"arc\", \"fwd\"|\"rev\"]");
  auto arc = net.find_arc(j[0].get<std::string>());
  if (!arc) throw Error(Errc::parse, "unknown arc '" + j[0].get<std::string>() + "' in step");
  std::string dir = j[1].get<std::string>();
  if (dir != "fwd" && dir != "rev")
    throw Error(Errc::parse, "step direction must be fwd or rev, got '" + dir + "'");
  return {*arc, dir == "rev"};
}

}  // namespace

Lottery lottery_from_json(const RootedNetwork& net, const json& j) {
  if (!j.is_object() || !j.contains("lottery"))
    throw Error(Errc::parse, "strategy JSON needs a lottery array");
  Lottery lot;
  for (const auto& e : j["lottery"]) {
    PureSearch s;
    for (const auto& st : e["steps"]) s.steps.push_back(step_from_json(net, st));
    lot.entries.emplace_back(rat_from_json(e["prob"]), std::move(s));
  }
  return lot;
}

json search_to_json(const RootedNetwork& net, const PureSearch& s) {
  json steps = json::array();
  for (const Step& st : s.steps)
    steps.push_back(json::array({net.arc(st.arc).id, st.rev ? "rev" : "fwd"}));
  return steps;
}

json lottery_to_json(const RootedNetwork& net, const Lottery& lot) {
  json entries = json::array();
  for (const auto& [p, s] : lot.entries)
    entries.push_back({{"prob", rat_str(p)}, {"steps", search_to_json(net, s)}});
  return json{{"lottery", entries}};
}

HiderDistribution hider_from_json(const RootedNetwork& net, const json& j) {
  HiderDistribution h;
  if (j.contains("atoms")) {
    for (const auto& a : j["atoms"]) {
      Point p;
      if (a.contains("node")) {
        auto v = net.find_node(a["node"].get<std::string>());
        if (!v) throw Error(Errc::parse, "unknown node '" + a["node"].get<std::string>() + "'");
        p = node_point(net, *v);
      } else {
        auto arc = net.find_arc(a["arc"].get<std::string>());
        if (!arc) throw Error(Errc::parse, "unknown arc '" + a["arc"].get<std::string>() + "'");
        p = Point{*arc, rat_from_json(a["offset"])};
      }
      h.atoms.push_back({p, rat_from_json(a["mass"])});
    }
  }
  if (j.contains("uniforms")) {
    for (const auto& u : j["uniforms"]) {
      auto arc = net.find_arc(u["arc"].get<std::string>());
      if (!arc) throw Error(Errc::parse, "unknown arc '" + u["arc"].get<std::string>() + "'");
      Rat lo = u.contains("from") ? rat_from_json(u["from"]) : Rat(0);
      Rat hi = u.contains("to") ? rat_from_json(u["to"]) : net.arc(*arc).length;
      h.uniforms.push_back({*arc, lo, hi, rat_from_json(u["mass"])});
    }
  }
  validate_hider(net, h);
  return h;
}

json hider_to_json(const RootedNetwork& net, const HiderDistribution& h) {
  json atoms = json::array();
  for (const auto& a : h.atoms) {
    json e;
    if (auto n = point_node(net, a.at))
      e["node"] = net.node_name(*n);
    else {
      e["arc"] = net.arc(a.at.arc).id;
      e["offset"] = rat_str(a.at.offset);
    }
    e["mass"] = rat_str(a.mass);
    atoms.push_back(e);
  }
  json uniforms = json::array();
  for (const auto& u : h.uniforms)
    uniforms.push_back({{"arc", net.arc(u.arc).id},
                        {"from", rat_str(u.lo)},
                        {"to", rat_str(u.hi)},
                        {"mass", rat_str(u.mass)}});
  return json{{"atoms", atoms}, {"uniforms", uniforms}};
}

json point_to_json(const RootedNetwork& net, const Point& p) {
  if (auto n = point_node(net, p)) return json{{"node", net.node_name(*n)}};
  return json{{"arc", net.arc(p.arc).id}, {"offset", rat_str(p.offset)}};
}

}  // namespace expsearch
