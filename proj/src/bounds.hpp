#pragma once

#include <vector>

#include "decomposition.hpp"
#include "search.hpp"

namespace expsearch {

// (mu^2 + pi^2) / (2 mu); requires 0 <= pi <= mu.
Rat pruning_bound(const Rat& mu, const Rat& pi);

// Proof-device transformations. Q': every block arc becomes a loop at the
// root, leaving the bridge tree plus loops. Q'': additionally, subtrees
// hanging off the interior of a maximal root-to-leaf bridge path are
// reattached at the root, so that path runs through degree-2 nodes only.
RootedNetwork build_q_prime(const RootedNetwork& net, const Decomposition& dec);
RootedNetwork build_q_double_prime(const RootedNetwork& net, const Decomposition& dec);

// Uniform density 1/mu on every block arc; all bridge mass pushed leafward
// onto the leaf nodes of the bridge tree in EBD proportions.
HiderDistribution pushed_uniform(const RootedNetwork& net, const Decomposition& dec);

// (mu + (mu1/mu) D(Q^t)) / 2.
Rat pushed_uniform_bound(const RootedNetwork& net, const Decomposition& dec);

// Factor curves over the bridge ratio.
double factor_f(double r);         // (1+r)/(1+r^2)
double factor_g(double r);         // 2/(1+r^2)
double combined_factor(double r);  // best of beta/gamma guarantees
double factor_cap();               // (1+sqrt(2))/2
double breakpoint_f();             // sqrt(2)-1
double breakpoint_g();             // sqrt((3-sqrt 2)/(1+sqrt 2))

struct CurveRow {
  double r, f, g, combined;
};
std::vector<CurveRow> bound_curve(double step);

// min(f(pi/mu), (1+sqrt 2)/2): the sharper height-based beta guarantee.
double beta_factor(const Decomposition& dec);

struct BoundsReport {
  Rat uniform_lb;          // mu/2
  Rat pruning_lb;          // (mu^2+pi^2)/(2mu)
  Rat pushed_uniform_lb;   // (mu + (mu1/mu) D(Q^t))/2
  Rat beta_ub;             // (mu+pi)/2
  Rat gamma_ub;            // mu2 + (mu1 + D(Q^t))/2
  Rat r;
  Rat pi;
  Rat factor_gamma;        // 2/(1+r^2), exact
  double factor_beta;      // min(f(pi/mu), cap)
  double combined;         // combined_factor(r)
};

BoundsReport bounds_report(const RootedNetwork& net, const Decomposition& dec);

}  // namespace expsearch
