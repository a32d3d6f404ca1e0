#pragma once

#include <string>

#include "json_io.hpp"

namespace expsearch {

// One JSON payload per CLI verb; the C API hands these across the boundary
// and the CLI renders them (or prints them raw under --json).
json inspect_report(const RootedNetwork& net);
json decompose_report(const RootedNetwork& net);
json tree_solve_report(const RootedNetwork& net);
json bayes_report(const RootedNetwork& net, const json& hider_json);
json beta_report(const RootedNetwork& net);
json gamma_report(const RootedNetwork& net, const Rat& h);
json bounds_report_json(const RootedNetwork& net);
json circle_spike_report(const Rat& alpha);
json evaluate_report(const RootedNetwork& net, const json& strategy_json, const json& hider_json);
json oracle_report(const RootedNetwork& net, const Rat& h, double eps, std::size_t cap,
                   bool no_dominance, bool exact, std::uint64_t seed);
std::string bound_curve_csv(double step);
std::string oracle_matrix_csv(const RootedNetwork& net, const Rat& h, std::size_t cap,
                              bool no_dominance);

}  // namespace expsearch
