#pragma once

#include <vector>

#include "decomposition.hpp"
#include "search.hpp"

namespace expsearch {

// A whole-arc search of one block that starts at `entry`, ends back at
// `entry`, and whose time-reverse is again a valid search from `entry`.
// Built from an ear decomposition: a first cycle through the entry, then each
// further ear spliced in between the first coverage of its start attachment
// and the last incidence of its end attachment, which keeps both the search
// and its reverse valid. Throws NotTwoArcConnected when no ear decomposition
// exists.
PureSearch reversible_block_search(const RootedNetwork& net, const std::vector<int>& block_arcs,
                                   int entry);

// Block-optimal strategy: the equiprobable mix of S1 and its mirror S2.
// S1 walks the bridge structure depth-first in canonical order and runs the
// fixed reversible search inside every block, detouring into a hanging
// subtree the moment its attachment node is first covered. S2 reverses every
// branch order and every block search; a subtree hanging at block node u is
// entered just before the reversed step that uncovered u in S1, which makes
// S1 and S2 cover the off-path material exactly once between them.
class BetaStrategy : public Strategy {
 public:
  PureSearch s1, s2;
  std::vector<PureSearch> block_search;  // per block, from its gateway

  Rat time_to(const RootedNetwork& net, const Point& h) const override {
    return (search_time(net, s1, h) + search_time(net, s2, h)) / 2;
  }
};

BetaStrategy build_beta(const RootedNetwork& net, const Decomposition& dec);

// Guaranteed worst case of beta: (mu + pi) / 2, attained at a highest leaf.
Rat beta_max_time(const Decomposition& dec);

}  // namespace expsearch
