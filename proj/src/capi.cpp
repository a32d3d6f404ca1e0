#include "expsearch.h"

#include <cstdlib>
#include <cstring>
#include <new>

#include "fixtures.hpp"
#include "report.hpp"

using namespace expsearch;

struct exs_network {
  RootedNetwork net;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

exs_status status_of(Errc code) {
  switch (code) {
    case Errc::parse: return EXS_ERR_PARSE;
    case Errc::disconnected:
    case Errc::nonpositive_length:
    case Errc::missing_root:
    case Errc::duplicate_arc_id:
    case Errc::point_is_node:
    case Errc::zero_length:
    case Errc::interrupted_segment: return EXS_ERR_INVALID;
    case Errc::not_a_tree:
    case Errc::not_two_arc_connected: return EXS_ERR_UNSUPPORTED;
    case Errc::cap_exceeded: return EXS_ERR_CAP_EXCEEDED;
    case Errc::no_convergence: return EXS_ERR_NO_CONVERGENCE;
    case Errc::out_of_range:
    case Errc::bad_argument: return EXS_ERR_BAD_ARGUMENT;
    case Errc::internal: return EXS_ERR_INTERNAL;
  }
  return EXS_ERR_INTERNAL;
}

template <typename Fn>
exs_status guarded(char** err, Fn&& fn) {
  try {
    fn();
    return EXS_OK;
  } catch (const Error& e) {
    if (err) *err = dup_string(e.what());
    return status_of(e.code());
  } catch (const json::exception& e) {
    if (err) *err = dup_string(std::string("Parse: ") + e.what());
    return EXS_ERR_PARSE;
  } catch (const std::exception& e) {
    if (err) *err = dup_string(e.what());
    return EXS_ERR_INTERNAL;
  }
}

exs_status emit(char** out, char** err, const std::string& payload) {
  char* s = dup_string(payload);
  if (!s) {
    if (err) *err = nullptr;
    return EXS_ERR_INTERNAL;
  }
  *out = s;
  return EXS_OK;
}

Rat parse_or(const char* text, const Rat& fallback) {
  if (!text || !*text) return fallback;
  return rat_parse(text);
}

}  // namespace

extern "C" {

const char* exs_version(void) { return "expsearch 1.0.0"; }

void exs_string_free(char* s) { std::free(s); }

exs_status exs_network_from_json(const char* json_text, exs_network** out, char** err) {
  if (!json_text || !out) return EXS_ERR_BAD_ARGUMENT;
  return guarded(err, [&] {
    json j = json::parse(json_text);
    auto* handle = new exs_network{network_from_json(j)};
    *out = handle;
  });
}

exs_status exs_fixture(const char* name, const char* alpha, long n, exs_network** out, char** err) {
  if (!name || !out) return EXS_ERR_BAD_ARGUMENT;
  return guarded(err, [&] {
    Rat a = parse_or(alpha, Rat(1, 2));
    long nn = n > 0 ? n : 4;
    *out = new exs_network{fixture(name, a, nn)};
  });
}

void exs_network_free(exs_network* net) { delete net; }

exs_status exs_network_to_json(const exs_network* net, char** out, char** err) {
  if (!net || !out) return EXS_ERR_BAD_ARGUMENT;
  return guarded(err, [&] { emit(out, err, network_to_json(net->net).dump(2)); });
}

exs_status exs_network_to_dot(const exs_network* net, char** out, char** err) {
  if (!net || !out) return EXS_ERR_BAD_ARGUMENT;
  return guarded(err, [&] { emit(out, err, network_to_dot(net->net)); });
}

exs_status exs_inspect(const exs_network* net, char** json_out, char** err) {
  if (!net || !json_out) return EXS_ERR_BAD_ARGUMENT;
  return guarded(err, [&] { emit(json_out, err, inspect_report(net->net).dump(2)); });
}

exs_status exs_subdivide(const exs_network* net, const char* arc_id, const char* offset,
                         exs_network** out, char** err) {
  if (!net || !arc_id || !offset || !out) return EXS_ERR_BAD_ARGUMENT;
  return guarded(err, [&] {
    auto arc = net->net.find_arc(arc_id);
    if (!arc) throw Error(Errc::bad_argument, std::string("unknown arc '") + arc_id + "'");
    *out = new exs_network{subdivide(net->net, Point{*arc, rat_parse(offset)})};
  });
}

exs_status exs_decompose(const exs_network* net, char** json_out, char** err) {
  if (!net || !json_out) return EXS_ERR_BAD_ARGUMENT;
  return guarded(err, [&] { emit(json_out, err, decompose_report(net->net).dump(2)); });
}

exs_status exs_tree_solve(const exs_network* net, char** json_out, char** err) {
  if (!net || !json_out) return EXS_ERR_BAD_ARGUMENT;
  return guarded(err, [&] { emit(json_out, err, tree_solve_report(net->net).dump(2)); });
}

exs_status exs_bayes(const exs_network* net, const char* hider_json, char** json_out, char** err) {
  if (!net || !hider_json || !json_out) return EXS_ERR_BAD_ARGUMENT;
  return guarded(err, [&] {
    emit(json_out, err, bayes_report(net->net, json::parse(hider_json)).dump(2));
  });
}

exs_status exs_beta(const exs_network* net, char** json_out, char** err) {
  if (!net || !json_out) return EXS_ERR_BAD_ARGUMENT;
  return guarded(err, [&] { emit(json_out, err, beta_report(net->net).dump(2)); });
}

exs_status exs_gamma(const exs_network* net, const char* h, char** json_out, char** err) {
  if (!net || !json_out) return EXS_ERR_BAD_ARGUMENT;
  return guarded(err, [&] {
    emit(json_out, err, gamma_report(net->net, parse_or(h, Rat(1, 4))).dump(2));
  });
}

exs_status exs_bounds(const exs_network* net, char** json_out, char** err) {
  if (!net || !json_out) return EXS_ERR_BAD_ARGUMENT;
  return guarded(err, [&] { emit(json_out, err, bounds_report_json(net->net).dump(2)); });
}

exs_status exs_bound_curve(const char* step, char** csv_out, char** err) {
  if (!csv_out) return EXS_ERR_BAD_ARGUMENT;
  return guarded(err, [&] {
    double s = rat_double(parse_or(step, Rat(1, 100)));
    emit(csv_out, err, bound_curve_csv(s));
  });
}

exs_status exs_circle_spike(const char* alpha, char** json_out, char** err) {
  if (!json_out) return EXS_ERR_BAD_ARGUMENT;
  return guarded(err, [&] {
    emit(json_out, err, circle_spike_report(parse_or(alpha, Rat(1, 2))).dump(2));
  });
}

exs_status exs_evaluate(const exs_network* net, const char* strategy_json, const char* hider_json,
                        char** json_out, char** err) {
  if (!net || !strategy_json || !hider_json || !json_out) return EXS_ERR_BAD_ARGUMENT;
  return guarded(err, [&] {
    emit(json_out, err,
         evaluate_report(net->net, json::parse(strategy_json), json::parse(hider_json)).dump(2));
  });
}

exs_status exs_oracle(const exs_network* net, const char* h, const char* eps, long cap, int flags,
                      unsigned long long seed, char** json_out, char** err) {
  if (!net || !json_out) return EXS_ERR_BAD_ARGUMENT;
  return guarded(err, [&] {
    Rat hh = parse_or(h, Rat(1, 8));
    double ee = eps && *eps ? rat_double(rat_parse(eps)) : 1e-6;
    std::size_t cc = cap > 0 ? static_cast<std::size_t>(cap) : 200000;
    emit(json_out, err,
         oracle_report(net->net, hh, ee, cc, flags & EXS_ORACLE_NO_DOMINANCE,
                       !(flags & EXS_ORACLE_ITERATIVE), seed)
             .dump(2));
  });
}

exs_status exs_oracle_matrix(const exs_network* net, const char* h, long cap, int flags,
                             char** csv_out, char** err) {
  if (!net || !csv_out) return EXS_ERR_BAD_ARGUMENT;
  return guarded(err, [&] {
    Rat hh = parse_or(h, Rat(1, 8));
    std::size_t cc = cap > 0 ? static_cast<std::size_t>(cap) : 200000;
    emit(csv_out, err, oracle_matrix_csv(net->net, hh, cc, flags & EXS_ORACLE_NO_DOMINANCE));
  });
}

exs_status exs_fixture_list(char** json_out, char** err) {
  if (!json_out) return EXS_ERR_BAD_ARGUMENT;
  return guarded(err, [&] {
    json list = json::array();
    for (const auto& [name, desc] : fixture_catalog())
      list.push_back({{"name", name}, {"description", desc}});
    emit(json_out, err, list.dump(2));
  });
}

}  // extern "C"
