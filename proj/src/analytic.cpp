#include "analytic.hpp"

#include <cmath>

namespace expsearch {

const Rat kSqrt2 = Rat(BigInt("63018038201"), BigInt("44560482149"));

namespace {

void check_alpha(const Rat& alpha) {
  if (alpha < 0 || alpha >= 1)
    throw Error(Errc::out_of_range, "alpha must lie in [0,1), got " + rat_str(alpha));
}

}  // namespace

RootedNetwork circle_spike_network(const Rat& alpha) {
  check_alpha(alpha);
  return RootedNetwork::build(
      "O", {"O", "A", "B"},
      {{"cw", "O", "A", 1 + alpha}, {"ccw", "O", "A", 1 - alpha}, {"spike", "A", "B", Rat(1)}});
}

Rat cs_value(const Rat& alpha) {
  check_alpha(alpha);
  return (4 + alpha) / (2 + alpha);
}

HiderDistribution cs_hider(const Rat& alpha) {
  check_alpha(alpha);
  Rat p = 2 * alpha / (alpha + 2);
  HiderDistribution h;
  h.atoms.push_back({Point{2, Rat(1)}, 1 - p});  // node B: end of the spike
  if (p != 0) h.uniforms.push_back({0, Rat(0), 1 + alpha, p});
  return h;
}

Lottery cs_searcher(const Rat& alpha) {
  check_alpha(alpha);
  // arc indices in circle_spike_network: 0 = cw, 1 = ccw, 2 = spike
  PureSearch p1{{{1, false}, {2, false}, {0, true}}};   // anticlockwise, spike, back A->O
  PureSearch p2{{{1, false}, {2, false}, {0, false}}};  // same but last arc O->A
  PureSearch p3{{{0, false}, {2, false}, {1, true}}};   // clockwise first
  Lottery lot;
  lot.entries.emplace_back(Rat(1, 2), p1);
  lot.entries.emplace_back(Rat(1) / (2 * (2 + alpha)), p2);
  lot.entries.emplace_back((1 + alpha) / (2 * (2 + alpha)), p3);
  return lot;
}

RootedNetwork star_network(long n) {
  if (n < 1) throw Error(Errc::out_of_range, "star needs n >= 1");
  std::vector<std::string> nodes = {"O", "L"};
  std::vector<ArcInput> arcs = {{"long", "O", "L", Rat(1)}};
  Rat short_len = kSqrt2 / n;
  for (long i = 1; i <= n; ++i) {
    std::string leaf = "s" + std::to_string(i);
    nodes.push_back(leaf);
    arcs.push_back({"a" + std::to_string(i), "O", leaf, short_len});
  }
  return RootedNetwork::build("O", nodes, arcs);
}

double star_ratio(long n) {
  if (n < 1) throw Error(Errc::out_of_range, "star needs n >= 1");
  double s2 = std::sqrt(2.0);
  double beta_time = (2 + s2) / 2;
  double value = (2 + s2 + 1.0 / static_cast<double>(n)) / (1 + s2);
  return beta_time / value;
}

}  // namespace expsearch
