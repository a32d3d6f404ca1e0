#pragma once

#include <json.hpp>

#include "network.hpp"
#include "search.hpp"

namespace expsearch {

using nlohmann::json;

// Rationals travel as {"exact": "p/q", "approx": double}; both the human and
// the machine renderings draw from the same payload.
json rat_json(const Rat& value);

// Accepts JSON numbers (exact binary value) and "p/q" / decimal strings.
Rat rat_from_json(const json& j);

// {"root": ..., "nodes": [...], "arcs": [{"id","u","v","length"}]}
RootedNetwork network_from_json(const json& j);
json network_to_json(const RootedNetwork& net);
std::string network_to_dot(const RootedNetwork& net);

// {"lottery":[{"prob":"1/2","steps":[["d","fwd"],["x","rev"],...]},...]}
Lottery lottery_from_json(const RootedNetwork& net, const json& j);
json lottery_to_json(const RootedNetwork& net, const Lottery& lot);
json search_to_json(const RootedNetwork& net, const PureSearch& s);

// {"atoms":[{"node":"B","mass":...} | {"arc":"x","offset":...,"mass":...}],
//  "uniforms":[{"arc":"cw","from":...,"to":...,"mass":...}]}
HiderDistribution hider_from_json(const RootedNetwork& net, const json& j);
json hider_to_json(const RootedNetwork& net, const HiderDistribution& h);

json point_to_json(const RootedNetwork& net, const Point& p);

}  // namespace expsearch
