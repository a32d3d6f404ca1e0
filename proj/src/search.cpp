#include "search.hpp"

#include <algorithm>

namespace expsearch {

namespace {

bool run_steps(const RootedNetwork& net, const PureSearch& s, int start) {
  if (static_cast<size_t>(net.arc_count()) != s.steps.size()) return false;
  std::vector<char> used(net.arc_count(), 0);
  std::vector<char> covered(net.node_count(), 0);
  covered[start] = 1;
  for (const Step& st : s.steps) {
    if (st.arc < 0 || st.arc >= net.arc_count() || used[st.arc]) return false;
    if (!covered[st.from(net)]) return false;
    used[st.arc] = 1;
    covered[st.to(net)] = 1;
  }
  return true;
}

}  // namespace

bool is_valid(const RootedNetwork& net, const PureSearch& s) {
  return net.root() >= 0 && run_steps(net, s, net.root());
}

bool is_valid_from(const RootedNetwork& net, const PureSearch& s, int start) {
  return run_steps(net, s, start);
}

bool is_valid_trail_from(const RootedNetwork& net, const std::vector<Step>& steps, int start) {
  std::vector<char> used(net.arc_count(), 0);
  std::vector<char> covered(net.node_count(), 0);
  covered[start] = 1;
  for (const Step& st : steps) {
    if (st.arc < 0 || st.arc >= net.arc_count() || used[st.arc]) return false;
    if (!covered[st.from(net)]) return false;
    used[st.arc] = 1;
    covered[st.to(net)] = 1;
  }
  return true;
}

Rat search_time(const RootedNetwork& net, const PureSearch& s, const Point& h) {
  auto node = point_node(net, h);
  if (node && *node == net.root()) return 0;
  Rat t = 0;
  if (node) {
    for (const Step& st : s.steps) {
      const Rat& len = net.arc(st.arc).length;
      if (st.from(net) == *node) return t;
      if (st.to(net) == *node) return t + len;
      t += len;
    }
    throw Error(Errc::internal, "search never reaches node " + net.node_name(*node));
  }
  for (const Step& st : s.steps) {
    const Rat& len = net.arc(st.arc).length;
    if (st.arc == h.arc) return t + (st.rev ? len - h.offset : h.offset);
    t += len;
  }
  throw Error(Errc::internal, "search never covers arc of point");
}

PureSearch reverse_search(const PureSearch& s) {
  PureSearch r;
  r.steps.reserve(s.steps.size());
  for (auto it = s.steps.rbegin(); it != s.steps.rend(); ++it)
    r.steps.push_back(Step{it->arc, !it->rev});
  return r;
}

bool is_reversible(const RootedNetwork& net, const PureSearch& s) {
  if (s.steps.empty()) return false;
  PureSearch r = reverse_search(s);
  return is_valid_from(net, r, r.steps.front().from(net));
}

void validate_hider(const RootedNetwork& net, const HiderDistribution& h) {
  Rat total = 0;
  for (const auto& a : h.atoms) {
    if (a.at.arc < 0 || a.at.arc >= net.arc_count())
      throw Error(Errc::bad_argument, "atom on unknown arc");
    if (a.at.offset < 0 || a.at.offset > net.arc(a.at.arc).length)
      throw Error(Errc::out_of_range, "atom offset outside its arc");
    if (a.mass < 0) throw Error(Errc::bad_argument, "negative atom mass");
    total += a.mass;
  }
  for (const auto& u : h.uniforms) {
    if (u.arc < 0 || u.arc >= net.arc_count())
      throw Error(Errc::bad_argument, "uniform segment on unknown arc");
    if (u.lo < 0 || u.hi > net.arc(u.arc).length || u.lo > u.hi)
      throw Error(Errc::out_of_range, "uniform segment outside its arc");
    if (u.mass < 0) throw Error(Errc::bad_argument, "negative segment mass");
    total += u.mass;
  }
  if (total != 1)
    throw Error(Errc::bad_argument, "hider masses sum to " + rat_str(total) + ", expected 1");
}

HiderDistribution uniform_hider(const RootedNetwork& net) {
  HiderDistribution h;
  Rat mu = net.total_measure();
  for (int i = 0; i < net.arc_count(); ++i) {
    const Arc& a = net.arc(i);
    h.uniforms.push_back({i, Rat(0), a.length, a.length / mu});
  }
  return h;
}

Rat LotteryStrategy::time_to(const RootedNetwork& net, const Point& h) const {
  Rat t = 0;
  for (const auto& [p, s] : lottery_.entries) t += p * search_time(net, s, h);
  return t;
}

void validate_lottery(const RootedNetwork& net, const Lottery& lot) {
  Rat total = 0;
  for (const auto& [p, s] : lot.entries) {
    if (p < 0) throw Error(Errc::bad_argument, "negative lottery probability");
    total += p;
    if (!is_valid(net, s)) throw Error(Errc::bad_argument, "lottery support is not a valid search");
  }
  if (total != 1)
    throw Error(Errc::bad_argument, "lottery probabilities sum to " + rat_str(total) + ", expected 1");
}

Rat expected_time(const RootedNetwork& net, const Strategy& s, const HiderDistribution& h) {
  Rat t = 0;
  for (const auto& a : h.atoms)
    if (a.mass != 0) t += a.mass * s.time_to(net, a.at);
  for (const auto& u : h.uniforms) {
    if (u.mass == 0) continue;
    Point mid{u.arc, (u.lo + u.hi) / 2};
    t += u.mass * s.time_to(net, mid);
  }
  return t;
}

std::pair<Rat, Point> max_time(const RootedNetwork& net, const Strategy& s,
                               const std::vector<Point>& candidates) {
  if (candidates.empty()) throw Error(Errc::bad_argument, "empty candidate set");
  Rat best;
  Point arg;
  bool first = true;
  for (const Point& p : candidates) {
    Rat t = s.time_to(net, p);
    if (first || t > best) {
      best = t;
      arg = p;
      first = false;
    }
  }
  return {best, arg};
}

Rat density(const RootedNetwork& net, const HiderDistribution& nu, const std::vector<Segment>& region) {
  Rat len = 0;
  for (const auto& seg : region) len += seg.hi - seg.lo;
  if (len == 0) throw Error(Errc::zero_length, "region has zero length");
  Rat mass = 0;
  for (const auto& a : nu.atoms) {
    for (const auto& seg : region) {
      bool inside = false;
      if (a.at.arc == seg.arc && a.at.offset >= seg.lo && a.at.offset <= seg.hi) inside = true;
      // a point sitting at a node may belong to the region through any arm
      if (!inside) {
        auto n = point_node(net, a.at);
        if (n) {
          const Arc& sa = net.arc(seg.arc);
          if ((sa.u == *n && seg.lo == 0) || (sa.v == *n && seg.hi == sa.length)) inside = true;
        }
      }
      if (inside) {
        mass += a.mass;
        break;
      }
    }
  }
  for (const auto& u : nu.uniforms) {
    if (u.hi == u.lo) continue;
    for (const auto& seg : region) {
      if (seg.arc != u.arc) continue;
      Rat lo = std::max(seg.lo, u.lo);
      Rat hi = std::min(seg.hi, u.hi);
      if (hi > lo) mass += u.mass * (hi - lo) / (u.hi - u.lo);
    }
  }
  return mass / len;
}

std::vector<Segment> whole_arcs(const RootedNetwork& net, const std::vector<int>& arcs) {
  std::vector<Segment> region;
  region.reserve(arcs.size());
  for (int ai : arcs) region.push_back({ai, Rat(0), net.arc(ai).length});
  return region;
}

}  // namespace expsearch
