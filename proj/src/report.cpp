#include "report.hpp"

#include <sstream>

#include "analytic.hpp"
#include "block_strategy.hpp"
#include "bounds.hpp"
#include "bridge_strategy.hpp"
#include "decomposition.hpp"
#include "oracle.hpp"
#include "tree_game.hpp"

namespace expsearch {

json inspect_report(const RootedNetwork& net) {
  json r;
  r["nodes"] = net.node_count();
  r["arcs"] = net.arc_count();
  r["root"] = net.root_name();
  std::string status = "ok";
  try {
    validate(net);
  } catch (const Error& e) {
    status = e.what();
  }
  r["validation"] = status;
  if (status == "ok") r["mu"] = rat_json(net.total_measure());
  r["network"] = network_to_json(net);
  return r;
}

json decompose_report(const RootedNetwork& net) {
  validate(net);
  Decomposition dec = decompose(net);
  json r;
  json bridges = json::array();
  for (int a = 0; a < net.arc_count(); ++a)
    if (dec.is_bridge[a]) bridges.push_back(net.arc(a).id);
  r["bridges"] = bridges;
  json blocks = json::array();
  for (const auto& blk : dec.blocks) {
    json ids = json::array();
    for (int a : blk) ids.push_back(net.arc(a).id);
    blocks.push_back(ids);
  }
  r["blocks"] = blocks;
  r["mu"] = rat_json(dec.mu);
  r["mu1"] = rat_json(dec.mu1);
  r["mu2"] = rat_json(dec.mu2);
  r["r"] = rat_json(dec.bridge_ratio());
  r["pi"] = rat_json(dec.network_height());
  r["bridge_tree"] = network_to_json(dec.bridge_tree);
  r["bridge_tree_dot"] = network_to_dot(dec.bridge_tree);
  r["dot"] = network_to_dot(net);
  return r;
}

json tree_solve_report(const RootedNetwork& net) {
  validate(net);
  TreeGameSolution sol = solve_tree_game(net);
  json r;
  json e = json::array();
  for (const auto& [leaf, mass] : sol.ebd)
    e.push_back({{"leaf", net.node_name(leaf)}, {"mass", rat_json(mass)}});
  r["ebd"] = e;
  r["D"] = rat_json(sol.D);
  r["value"] = rat_json(sol.value);
  json probs = json::array();
  for (int v = 0; v < net.node_count(); ++v) {
    const auto& fp = sol.searcher->first_probs_at(v);
    if (fp.size() < 2) continue;
    json entry;
    entry["node"] = net.node_name(v);
    json branches = json::array();
    for (const auto& [arc, p] : fp)
      branches.push_back({{"arc", net.arc(arc).id}, {"first_prob", rat_json(p)}});
    entry["branches"] = branches;
    probs.push_back(entry);
  }
  r["branch_probs"] = probs;
  return r;
}

json bayes_report(const RootedNetwork& net, const json& hider_json) {
  validate(net);
  HiderDistribution h = hider_from_json(net, hider_json);
  BayesResult res = bayes_tree_search(net, h);
  json r;
  r["value"] = rat_json(res.value);
  r["search"] = search_to_json(res.net, res.search);
  if (res.net.arc_count() != net.arc_count()) r["network"] = network_to_json(res.net);
  return r;
}

json beta_report(const RootedNetwork& net) {
  validate(net);
  Decomposition dec = decompose(net);
  BetaStrategy beta = build_beta(net, dec);
  json r;
  r["s1"] = search_to_json(net, beta.s1);
  r["s2"] = search_to_json(net, beta.s2);
  json blocks = json::array();
  for (size_t b = 0; b < beta.block_search.size(); ++b)
    blocks.push_back({{"entry", net.node_name(dec.gateway[b])},
                      {"steps", search_to_json(net, beta.block_search[b])}});
  r["block_searches"] = blocks;
  r["max_time"] = rat_json(beta_max_time(dec));
  r["factor_beta"] = beta_factor(dec);
  r["strategy"] = lottery_to_json(
      net, Lottery{{{Rat(1, 2), beta.s1}, {Rat(1, 2), beta.s2}}});
  return r;
}

json gamma_report(const RootedNetwork& net, const Rat& h) {
  validate(net);
  Decomposition dec = decompose(net);
  GammaStrategy gamma = build_gamma(net, dec);
  json r;
  json rule = json::array();
  if (gamma.tree_rule()) {
    const RootedNetwork& bt = dec.bridge_tree;
    for (int v = 0; v < bt.node_count(); ++v) {
      const auto& fp = gamma.tree_rule()->first_probs_at(v);
      if (fp.size() < 2) continue;
      json entry;
      entry["node"] = bt.node_name(v);
      json branches = json::array();
      for (const auto& [arc, p] : fp)
        branches.push_back({{"bridge", bt.arc(arc).id}, {"first_prob", rat_json(p)}});
      entry["branches"] = branches;
      rule.push_back(entry);
    }
  }
  r["tree_rule"] = rule;
  json blocks = json::array();
  for (size_t b = 0; b < gamma.block_searches().size(); ++b)
    blocks.push_back({{"entry", net.node_name(dec.gateway[b])},
                      {"steps", search_to_json(net, gamma.block_searches()[b])}});
  r["block_searches"] = blocks;
  std::vector<Point> candidates = hider_candidates(net, dec, h);
  auto [worst, arg] = max_time(net, gamma, candidates);
  r["worst_case"] = rat_json(worst);
  r["worst_point"] = point_to_json(net, arg);
  r["upper_bound"] = rat_json(gamma_upper_bound(dec));
  r["factor_gamma"] = rat_json(gamma_factor(dec));
  return r;
}

json bounds_report_json(const RootedNetwork& net) {
  validate(net);
  Decomposition dec = decompose(net);
  BoundsReport b = bounds_report(net, dec);
  json r;
  r["uniform_lb"] = rat_json(b.uniform_lb);
  r["pruning_lb"] = rat_json(b.pruning_lb);
  r["pushed_uniform_lb"] = rat_json(b.pushed_uniform_lb);
  r["beta_ub"] = rat_json(b.beta_ub);
  r["gamma_ub"] = rat_json(b.gamma_ub);
  r["r"] = rat_json(b.r);
  r["pi"] = rat_json(b.pi);
  r["factor_beta"] = b.factor_beta;
  r["factor_gamma"] = rat_json(b.factor_gamma);
  r["combined_factor"] = b.combined;
  r["pushed_uniform"] = hider_to_json(net, pushed_uniform(net, dec));
  return r;
}

json circle_spike_report(const Rat& alpha) {
  RootedNetwork net = circle_spike_network(alpha);
  json r;
  r["alpha"] = rat_str(alpha);
  r["value"] = rat_json(cs_value(alpha));
  r["hider"] = hider_to_json(net, cs_hider(alpha));
  Lottery sigma = cs_searcher(alpha);
  r["searcher"] = lottery_to_json(net, sigma);
  // equalizer table: interior clockwise points plus the spike tip
  LotteryStrategy strat(sigma);
  json table = json::array();
  Rat cw_len = 1 + alpha;
  for (int k = 1; k < 8; ++k) {
    Point p{0, cw_len * k / 8};
    table.push_back({{"point", point_to_json(net, p)},
                     {"expected_time", rat_json(strat.time_to(net, p))}});
  }
  Point b_pt{2, Rat(1)};
  table.push_back({{"point", point_to_json(net, b_pt)},
                   {"expected_time", rat_json(strat.time_to(net, b_pt))}});
  r["equalizer"] = table;
  r["network"] = network_to_json(net);
  return r;
}

json evaluate_report(const RootedNetwork& net, const json& strategy_json, const json& hider_json) {
  validate(net);
  Lottery lot = lottery_from_json(net, strategy_json);
  validate_lottery(net, lot);
  HiderDistribution h = hider_from_json(net, hider_json);
  LotteryStrategy strat(lot);
  json r;
  r["expected_time"] = rat_json(expected_time(net, strat, h));
  return r;
}

json oracle_report(const RootedNetwork& net, const Rat& h, double eps, std::size_t cap,
                   bool no_dominance, bool exact, std::uint64_t seed) {
  validate(net);
  OracleResult res = oracle_value(net, h, eps, cap, no_dominance, exact, seed);
  json r;
  r["value"] = rat_json(res.value);
  r["gap"] = rat_json(res.gap);
  r["h"] = rat_str(res.h);
  r["eps"] = res.eps;
  r["exact"] = res.exact;
  r["searches"] = res.searches_enumerated;
  r["distinct_rows"] = res.distinct_rows;
  r["candidates"] = res.candidates.size();
  json smix = json::array();
  for (const auto& [s, p] : res.searcher_mix)
    smix.push_back({{"prob", rat_json(p)}, {"steps", search_to_json(net, s)}});
  r["searcher_mix"] = smix;
  json hmix = json::array();
  for (const auto& [pt, p] : res.hider_mix)
    hmix.push_back({{"prob", rat_json(p)}, {"point", point_to_json(net, pt)}});
  r["hider_mix"] = hmix;
  return r;
}

std::string bound_curve_csv(double step) {
  std::ostringstream out;
  out << "r,f,g,combined\n";
  out.precision(12);
  for (const CurveRow& row : bound_curve(step))
    out << row.r << "," << row.f << "," << row.g << "," << row.combined << "\n";
  return out.str();
}

std::string oracle_matrix_csv(const RootedNetwork& net, const Rat& h, std::size_t cap,
                              bool no_dominance) {
  validate(net);
  OracleMatrix m = oracle_matrix(net, h, cap, no_dominance);
  std::ostringstream out;
  out << "search";
  for (const Point& p : m.candidates) out << "," << point_str(net, p);
  out << "\n";
  for (std::size_t i = 0; i < m.searches.size(); ++i) {
    for (size_t k = 0; k < m.searches[i].steps.size(); ++k) {
      const Step& st = m.searches[i].steps[k];
      out << (k ? " " : "") << net.arc(st.arc).id << (st.rev ? "'" : "");
    }
    for (const Rat& v : m.payoff[i]) out << "," << rat_str(v);
    out << "\n";
  }
  return out.str();
}

}  // namespace expsearch
