#pragma once

#include "search.hpp"

namespace expsearch {

// Circle of length 2 rooted at O with node A at clockwise distance 1+alpha
// and a unit spike A-B; arcs "cw" (O-A, length 1+alpha), "ccw" (O-A, length
// 1-alpha), "spike" (A-B, length 1). Requires 0 <= alpha < 1.
RootedNetwork circle_spike_network(const Rat& alpha);

// Game value (4+alpha)/(2+alpha).
Rat cs_value(const Rat& alpha);

// Optimal hider: atom 1-p at B and uniform mass p on the clockwise arc,
// p = 2 alpha / (alpha + 2).
HiderDistribution cs_hider(const Rat& alpha);

// Optimal searcher: lottery over P1, P2, P3 with probabilities
// (1/2, 1/(2(2+alpha)), (1+alpha)/(2(2+alpha))).
Lottery cs_searcher(const Rat& alpha);

// One arc of length 1 plus n arcs of length sqrt(2)/n from the root; sqrt(2)
// enters through a continued-fraction convergent accurate to ~1e-22 so the
// exact-rational pipeline applies.
RootedNetwork star_network(long n);

extern const Rat kSqrt2;  // that convergent

// T(beta) / V on the star family: ((2+sqrt 2)/2) / ((2+sqrt 2+1/n)/(1+sqrt 2)).
double star_ratio(long n);

}  // namespace expsearch
