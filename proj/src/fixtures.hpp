#pragma once

#include <string>
#include <vector>

#include "network.hpp"

namespace expsearch {

// Built-in networks used throughout the test and bounds tooling:
//   qbar               four bridges a,b,c,d around one four-arc block
//   circle_spike       parameterized by alpha (default 1/2)
//   star               one unit arc plus n arcs of length sqrt(2)/n (default n=4)
//   fig4               nineteen unit arcs: five three-arc blocks joined by
//                      bridges a,b,c,d (two of the blocks share the root, so
//                      they decompose as one six-arc block)
//   circle             a loop of length 2 at the root
//   parallel3          three parallel unit arcs
//   qbar_prime         qbar with its block turned into loops at the root
//   qbar_double_prime  qbar_prime with subtrees off the tallest path reattached
RootedNetwork fixture(const std::string& name, const Rat& alpha = Rat(1, 2), long n = 4);

std::vector<std::pair<std::string, std::string>> fixture_catalog();

}  // namespace expsearch
