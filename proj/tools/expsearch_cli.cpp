// Command-line front end for the expanding-search library. Talks to the core
// exclusively through the C API in expsearch.h and renders the JSON payloads.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "expsearch.h"

using nlohmann::json;

namespace {

struct Options {
  std::string network_file;
  std::string fixture;
  std::string alpha;
  long n = 0;
  bool as_json = false;
  int decimals = -1;
};

struct StringGuard {
  char* ptr = nullptr;
  ~StringGuard() { exs_string_free(ptr); }
};

struct NetworkGuard {
  exs_network* net = nullptr;
  ~NetworkGuard() { exs_network_free(net); }
};

int exit_code_for(exs_status st) {
  switch (st) {
    case EXS_OK: return 0;
    case EXS_ERR_CAP_EXCEEDED:
    case EXS_ERR_NO_CONVERGENCE: return 3;
    default: return 2;
  }
}

[[noreturn]] void fail(exs_status st, const char* err) {
  std::cerr << "error: " << (err ? err : "unknown failure") << "\n";
  std::exit(exit_code_for(st));
}

exs_network* load_network(const Options& opt) {
  NetworkGuard guard;
  StringGuard err;
  exs_status st;
  if (!opt.fixture.empty()) {
    st = exs_fixture(opt.fixture.c_str(), opt.alpha.empty() ? nullptr : opt.alpha.c_str(), opt.n,
                     &guard.net, &err.ptr);
  } else if (!opt.network_file.empty()) {
    std::ifstream in(opt.network_file);
    if (!in) {
      std::cerr << "error: cannot open '" << opt.network_file << "'\n";
      std::exit(2);
    }
    std::stringstream buf;
    buf << in.rdbuf();
    st = exs_network_from_json(buf.str().c_str(), &guard.net, &err.ptr);
  } else {
    std::cerr << "error: provide --network FILE or --fixture NAME\n";
    std::exit(2);
  }
  if (st != EXS_OK) fail(st, err.ptr);
  exs_network* out = guard.net;
  guard.net = nullptr;
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open '" << path << "'\n";
    std::exit(2);
  }
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Renders {"exact": "p/q", "approx": x} per the --decimals setting.
std::string show(const json& value, const Options& opt) {
  if (value.is_object() && value.contains("exact")) {
    std::string exact = value["exact"].get<std::string>();
    if (opt.decimals >= 0 || exact.size() > 24) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.*f", opt.decimals >= 0 ? opt.decimals : 9,
                    value["approx"].get<double>());
      return buf;
    }
    return exact;
  }
  if (value.is_string()) return value.get<std::string>();
  if (value.is_number_float()) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", opt.decimals >= 0 ? opt.decimals : 12,
                  value.get<double>());
    return buf;
  }
  return value.dump();
}

std::string show_steps(const json& steps) {
  std::string out;
  for (const auto& st : steps) {
    if (!out.empty()) out += ",";
    out += st[0].get<std::string>();
    if (st[1] == "rev") out += "'";
  }
  return out;
}

std::string show_point(const json& p) {
  if (p.contains("node")) return p["node"].get<std::string>();
  return p["arc"].get<std::string>() + "@" + p["offset"].get<std::string>();
}

void emit_or_save(const std::string& text, const std::string& out_file) {
  if (out_file.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
  } else {
    std::ofstream out(out_file);
    out << text;
  }
}

void print_json_or(const Options& opt, const std::string& payload,
                   const std::function<void(const json&)>& human) {
  if (opt.as_json) {
    std::cout << payload << "\n";
    return;
  }
  human(json::parse(payload));
}

unsigned long long env_seed() {
  const char* s = std::getenv("EXPSEARCH_SEED");
  if (!s || !*s) return 0;
  return std::strtoull(s, nullptr, 10);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"expanding-search strategies, bounds and exact desk-scale game values"};
  app.require_subcommand(1);

  Options opt;
  std::string hider_file, strategy_file, h_step = "", eps = "", step = "0.01";
  std::string out_file, matrix_file;
  long cap = 200000;
  bool no_dominance = false, iterative = false;

  // --h is a documented option name, so help must not claim -h
  app.set_help_flag("--help", "print help");

  auto add_common = [&](CLI::App* cmd, bool needs_network) {
    cmd->set_help_flag("--help", "print help");
    if (needs_network) {
      cmd->add_option("--network", opt.network_file, "network JSON file");
      cmd->add_option("--fixture", opt.fixture, "built-in fixture name");
      cmd->add_option("--alpha", opt.alpha, "circle_spike parameter (rational)");
      cmd->add_option("--n", opt.n, "star parameter");
    }
    cmd->add_flag("--json", opt.as_json, "machine-readable output");
    cmd->add_option("--decimals", opt.decimals, "render rationals with this many decimals");
  };

  auto* c_fixtures = app.add_subcommand("fixtures", "list built-in networks");
  add_common(c_fixtures, false);

  auto* c_inspect = app.add_subcommand("inspect", "validate and summarize a network");
  add_common(c_inspect, true);
  c_inspect->add_option("--dot", out_file, "write DOT to this file");

  auto* c_dec = app.add_subcommand("decompose", "bridges, blocks, bridge tree, heights");
  add_common(c_dec, true);
  c_dec->add_option("--dot", out_file, "write the network DOT to this file");
  std::string tree_out;
  c_dec->add_option("--tree-out", tree_out, "write the bridge tree JSON to this file");

  auto* c_tree = app.add_subcommand("tree-solve", "EBD, D, value and branch probabilities");
  add_common(c_tree, true);

  auto* c_bayes = app.add_subcommand("bayes", "optimal search against a known distribution");
  add_common(c_bayes, true);
  c_bayes->add_option("--hider", hider_file, "hider distribution JSON")->required();

  auto* c_beta = app.add_subcommand("beta", "block-optimal strategy");
  add_common(c_beta, true);
  c_beta->add_option("--out", out_file, "write the strategy JSON to this file");

  auto* c_gamma = app.add_subcommand("gamma", "bridge-optimal strategy");
  add_common(c_gamma, true);
  c_gamma->add_option("--h", h_step, "hider grid step for the worst case (default 1/4)");

  auto* c_bounds = app.add_subcommand("bounds", "lower/upper bounds and factors");
  add_common(c_bounds, true);

  auto* c_curve = app.add_subcommand("bound-curve", "factor curve CSV over the bridge ratio");
  add_common(c_curve, false);
  c_curve->add_option("--step", step, "grid step (default 0.01)");
  c_curve->add_option("--out", out_file, "write CSV here instead of stdout");

  auto* c_cs = app.add_subcommand("circle-spike", "closed-form circle-with-spike solution");
  add_common(c_cs, false);
  c_cs->add_option("--alpha", opt.alpha, "spike position parameter in [0,1)");

  auto* c_oracle = app.add_subcommand("oracle", "exact desk-scale game value");
  add_common(c_oracle, true);
  c_oracle->add_option("--h", h_step, "hider grid step (default 1/8)");
  c_oracle->add_option("--eps", eps, "tolerance for the iterative solver (default 1e-6)");
  c_oracle->add_option("--cap", cap, "search enumeration cap (default 200000)");
  c_oracle->add_flag("--no-dominance", no_dominance, "include dominated hider candidates");
  c_oracle->add_flag("--iterative", iterative, "fictitious play instead of the exact solver");
  c_oracle->add_option("--matrix", matrix_file, "also dump the payoff matrix CSV here");

  auto* c_eval = app.add_subcommand("evaluate", "expected time of a strategy vs a hider");
  add_common(c_eval, true);
  c_eval->add_option("--strategy", strategy_file, "strategy JSON")->required();
  c_eval->add_option("--hider", hider_file, "hider distribution JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // malformed invocation is an input error
  }

  StringGuard payload, errmsg;

  if (c_fixtures->parsed()) {
    exs_status st = exs_fixture_list(&payload.ptr, &errmsg.ptr);
    if (st != EXS_OK) fail(st, errmsg.ptr);
    print_json_or(opt, payload.ptr, [&](const json& j) {
      for (const auto& f : j)
        std::cout << f["name"].get<std::string>() << "  -  "
                  << f["description"].get<std::string>() << "\n";
    });
    return 0;
  }

  if (c_curve->parsed()) {
    exs_status st = exs_bound_curve(step.c_str(), &payload.ptr, &errmsg.ptr);
    if (st != EXS_OK) fail(st, errmsg.ptr);
    emit_or_save(payload.ptr, out_file);
    return 0;
  }

  if (c_cs->parsed()) {
    exs_status st = exs_circle_spike(opt.alpha.empty() ? nullptr : opt.alpha.c_str(), &payload.ptr,
                                     &errmsg.ptr);
    if (st != EXS_OK) fail(st, errmsg.ptr);
    print_json_or(opt, payload.ptr, [&](const json& j) {
      std::cout << "alpha              " << j["alpha"].get<std::string>() << "\n";
      std::cout << "value              " << show(j["value"], opt) << "\n";
      std::cout << "hider atoms        ";
      for (const auto& a : j["hider"]["atoms"])
        std::cout << a["node"].get<std::string>() << ":" << a["mass"].get<std::string>() << " ";
      std::cout << "\nhider uniforms     ";
      for (const auto& u : j["hider"]["uniforms"])
        std::cout << u["arc"].get<std::string>() << "[" << u["from"].get<std::string>() << ","
                  << u["to"].get<std::string>() << "]:" << u["mass"].get<std::string>() << " ";
      std::cout << "\nsearcher lottery\n";
      for (const auto& e : j["searcher"]["lottery"])
        std::cout << "  p=" << e["prob"].get<std::string>() << "  " << show_steps(e["steps"])
                  << "\n";
      std::cout << "equalizer check\n";
      for (const auto& row : j["equalizer"])
        std::cout << "  " << show_point(row["point"]) << "  ->  "
                  << show(row["expected_time"], opt) << "\n";
    });
    return 0;
  }

  NetworkGuard net;
  net.net = load_network(opt);

  auto run = [&](exs_status st) {
    if (st != EXS_OK) fail(st, errmsg.ptr);
  };

  if (c_inspect->parsed()) {
    run(exs_inspect(net.net, &payload.ptr, &errmsg.ptr));
    if (!out_file.empty()) {
      StringGuard dot;
      run(exs_network_to_dot(net.net, &dot.ptr, &errmsg.ptr));
      emit_or_save(dot.ptr, out_file);
    }
    print_json_or(opt, payload.ptr, [&](const json& j) {
      std::cout << "root        " << j["root"].get<std::string>() << "\n";
      std::cout << "nodes       " << j["nodes"] << "\n";
      std::cout << "arcs        " << j["arcs"] << "\n";
      std::cout << "validation  " << j["validation"].get<std::string>() << "\n";
      if (j.contains("mu")) std::cout << "mu          " << show(j["mu"], opt) << "\n";
    });
    return 0;
  }

  if (c_dec->parsed()) {
    run(exs_decompose(net.net, &payload.ptr, &errmsg.ptr));
    json j = json::parse(std::string(payload.ptr));
    if (!out_file.empty()) emit_or_save(j["dot"].get<std::string>(), out_file);
    if (!tree_out.empty()) emit_or_save(j["bridge_tree"].dump(2), tree_out);
    print_json_or(opt, payload.ptr, [&](const json& r) {
      std::cout << "bridges  ";
      for (const auto& b : r["bridges"]) std::cout << b.get<std::string>() << " ";
      std::cout << "\nblocks   ";
      for (const auto& blk : r["blocks"]) {
        std::cout << "{";
        for (size_t i = 0; i < blk.size(); ++i) std::cout << (i ? "," : "") << blk[i].get<std::string>();
        std::cout << "} ";
      }
      std::cout << "\nmu=" << show(r["mu"], opt) << "  mu1=" << show(r["mu1"], opt)
                << "  mu2=" << show(r["mu2"], opt) << "  r=" << show(r["r"], opt)
                << "  pi=" << show(r["pi"], opt) << "\n";
    });
    return 0;
  }

  if (c_tree->parsed()) {
    run(exs_tree_solve(net.net, &payload.ptr, &errmsg.ptr));
    print_json_or(opt, payload.ptr, [&](const json& r) {
      std::cout << "EBD distribution\n";
      for (const auto& e : r["ebd"])
        std::cout << "  " << e["leaf"].get<std::string>() << "  " << show(e["mass"], opt) << "\n";
      std::cout << "D      " << show(r["D"], opt) << "\n";
      std::cout << "value  " << show(r["value"], opt) << "\n";
      for (const auto& bp : r["branch_probs"]) {
        std::cout << "at " << bp["node"].get<std::string>() << ":";
        for (const auto& br : bp["branches"])
          std::cout << "  " << br["arc"].get<std::string>() << " first w.p. "
                    << show(br["first_prob"], opt);
        std::cout << "\n";
      }
    });
    return 0;
  }

  if (c_bayes->parsed()) {
    std::string hider = read_file(hider_file);
    run(exs_bayes(net.net, hider.c_str(), &payload.ptr, &errmsg.ptr));
    print_json_or(opt, payload.ptr, [&](const json& r) {
      std::cout << "value   " << show(r["value"], opt) << "\n";
      std::cout << "search  " << show_steps(r["search"]) << "\n";
      if (r.contains("network"))
        std::cout << "(on the subdivided network; see --json for its definition)\n";
    });
    return 0;
  }

  if (c_beta->parsed()) {
    run(exs_beta(net.net, &payload.ptr, &errmsg.ptr));
    json j = json::parse(std::string(payload.ptr));
    if (!out_file.empty()) emit_or_save(j["strategy"].dump(2), out_file);
    print_json_or(opt, payload.ptr, [&](const json& r) {
      std::cout << "S1        " << show_steps(r["s1"]) << "\n";
      std::cout << "S2        " << show_steps(r["s2"]) << "\n";
      std::cout << "T(beta)   " << show(r["max_time"], opt) << "\n";
      std::cout << "factor    " << show(r["factor_beta"], opt) << "\n";
    });
    return 0;
  }

  if (c_gamma->parsed()) {
    run(exs_gamma(net.net, h_step.empty() ? nullptr : h_step.c_str(), &payload.ptr, &errmsg.ptr));
    print_json_or(opt, payload.ptr, [&](const json& r) {
      for (const auto& bp : r["tree_rule"]) {
        std::cout << "at " << bp["node"].get<std::string>() << ":";
        for (const auto& br : bp["branches"])
          std::cout << "  " << br["bridge"].get<std::string>() << " first w.p. "
                    << show(br["first_prob"], opt);
        std::cout << "\n";
      }
      for (const auto& bs : r["block_searches"])
        std::cout << "block from " << bs["entry"].get<std::string>() << ": "
                  << show_steps(bs["steps"]) << "\n";
      std::cout << "worst case    " << show(r["worst_case"], opt) << " at "
                << show_point(r["worst_point"]) << "\n";
      std::cout << "upper bound   " << show(r["upper_bound"], opt) << "\n";
      std::cout << "factor gamma  " << show(r["factor_gamma"], opt) << "\n";
    });
    return 0;
  }

  if (c_bounds->parsed()) {
    run(exs_bounds(net.net, &payload.ptr, &errmsg.ptr));
    print_json_or(opt, payload.ptr, [&](const json& r) {
      std::cout << "uniform lower bound         " << show(r["uniform_lb"], opt) << "\n";
      std::cout << "pruning lower bound         " << show(r["pruning_lb"], opt) << "\n";
      std::cout << "pushed-uniform lower bound  " << show(r["pushed_uniform_lb"], opt) << "\n";
      std::cout << "T(beta) upper bound         " << show(r["beta_ub"], opt) << "\n";
      std::cout << "gamma upper bound           " << show(r["gamma_ub"], opt) << "\n";
      std::cout << "r = " << show(r["r"], opt) << "   pi = " << show(r["pi"], opt) << "\n";
      std::cout << "factor beta     " << show(r["factor_beta"], opt) << "\n";
      std::cout << "factor gamma    " << show(r["factor_gamma"], opt) << "\n";
      std::cout << "combined        " << show(r["combined_factor"], opt) << "\n";
    });
    return 0;
  }

  if (c_oracle->parsed()) {
    int flags = (no_dominance ? EXS_ORACLE_NO_DOMINANCE : 0) | (iterative ? EXS_ORACLE_ITERATIVE : 0);
    if (!matrix_file.empty()) {
      StringGuard csv;
      run(exs_oracle_matrix(net.net, h_step.empty() ? nullptr : h_step.c_str(), cap,
                            no_dominance ? EXS_ORACLE_NO_DOMINANCE : 0, &csv.ptr, &errmsg.ptr));
      emit_or_save(csv.ptr, matrix_file);
    }
    run(exs_oracle(net.net, h_step.empty() ? nullptr : h_step.c_str(),
                   eps.empty() ? nullptr : eps.c_str(), cap, flags, env_seed(), &payload.ptr,
                   &errmsg.ptr));
    print_json_or(opt, payload.ptr, [&](const json& r) {
      std::cout << "value          " << show(r["value"], opt) << "   (h=" << r["h"].get<std::string>()
                << ", gap=" << show(r["gap"], opt) << ", "
                << (r["exact"].get<bool>() ? "exact" : "iterative") << ")\n";
      std::cout << "searches       " << r["searches"] << "  (" << r["distinct_rows"]
                << " distinct rows)\n";
      std::cout << "candidates     " << r["candidates"] << "\n";
      std::cout << "searcher mix\n";
      for (const auto& e : r["searcher_mix"])
        std::cout << "  p=" << show(e["prob"], opt) << "  " << show_steps(e["steps"]) << "\n";
      std::cout << "hider mix\n";
      for (const auto& e : r["hider_mix"])
        std::cout << "  p=" << show(e["prob"], opt) << "  " << show_point(e["point"]) << "\n";
    });
    return 0;
  }

  if (c_eval->parsed()) {
    std::string strategy = read_file(strategy_file);
    std::string hider = read_file(hider_file);
    run(exs_evaluate(net.net, strategy.c_str(), hider.c_str(), &payload.ptr, &errmsg.ptr));
    print_json_or(opt, payload.ptr, [&](const json& r) {
      std::cout << show(r["expected_time"], opt) << "\n";
    });
    return 0;
  }

  return 0;
}
