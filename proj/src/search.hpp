#pragma once

#include <memory>
#include <vector>

#include "network.hpp"

namespace expsearch {

struct Step {
  int arc = -1;
  bool rev = false;  // false: u -> v, true: v -> u

  int from(const RootedNetwork& net) const { return rev ? net.arc(arc).v : net.arc(arc).u; }
  int to(const RootedNetwork& net) const { return rev ? net.arc(arc).u : net.arc(arc).v; }
};

// Whole-arc expanding search: covers every arc exactly once, the first step
// leaves the root, and every step starts at an already covered node.
struct PureSearch {
  std::vector<Step> steps;
};

bool is_valid(const RootedNetwork& net, const PureSearch& s);

// Validity of the step sequence when the search is rooted at `start` instead.
bool is_valid_from(const RootedNetwork& net, const PureSearch& s, int start);

// Validity of a partial step sequence (arcs distinct, every step starts at a
// covered node) without requiring that it covers the whole network.
bool is_valid_trail_from(const RootedNetwork& net, const std::vector<Step>& steps, int start);

// First time the search covers H. The search is assumed valid.
Rat search_time(const RootedNetwork& net, const PureSearch& s, const Point& h);

// Steps in reverse order with directions flipped.
PureSearch reverse_search(const PureSearch& s);

// True when the reverse is itself an expanding search rooted at the node it
// starts at: every reversed step's start endpoint is covered by later
// original steps.
bool is_reversible(const RootedNetwork& net, const PureSearch& s);

struct HiderAtom {
  Point at;
  Rat mass;
};

struct HiderUniform {
  int arc = -1;
  Rat lo, hi;  // sub-interval of the arc, offsets from endpoint u
  Rat mass;
};

// Atoms at points plus uniform mass on arc segments, total mass 1.
struct HiderDistribution {
  std::vector<HiderAtom> atoms;
  std::vector<HiderUniform> uniforms;
};

void validate_hider(const RootedNetwork& net, const HiderDistribution& h);

HiderDistribution uniform_hider(const RootedNetwork& net);

// A mixed searcher strategy, evaluated through exact expected reach times.
// Lotteries evaluate support by support; decision rules (biased depth-first,
// gamma) override time_to with their branch recursions.
class Strategy {
 public:
  virtual ~Strategy() = default;
  virtual Rat time_to(const RootedNetwork& net, const Point& h) const = 0;
};

struct Lottery {
  std::vector<std::pair<Rat, PureSearch>> entries;  // probability, search
};

class LotteryStrategy : public Strategy {
 public:
  explicit LotteryStrategy(Lottery lot) : lottery_(std::move(lot)) {}
  const Lottery& lottery() const { return lottery_; }
  Rat time_to(const RootedNetwork& net, const Point& h) const override;

 private:
  Lottery lottery_;
};

void validate_lottery(const RootedNetwork& net, const Lottery& lot);

// Expectation over both the strategy and the hider distribution. A uniform
// segment is covered by one contiguous pass of whatever whole-arc step holds
// its arc, so it contributes exactly like an atom at its midpoint.
Rat expected_time(const RootedNetwork& net, const Strategy& s, const HiderDistribution& h);

// Worst hider response within a candidate set; first maximizer wins ties.
std::pair<Rat, Point> max_time(const RootedNetwork& net, const Strategy& s,
                               const std::vector<Point>& candidates);

struct Segment {
  int arc = -1;
  Rat lo, hi;
};

// rho(A) = nu(A) / lambda(A) over a region given as arc segments.
Rat density(const RootedNetwork& net, const HiderDistribution& nu, const std::vector<Segment>& region);

std::vector<Segment> whole_arcs(const RootedNetwork& net, const std::vector<int>& arcs);

}  // namespace expsearch
