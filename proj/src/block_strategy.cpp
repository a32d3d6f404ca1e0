#include "block_strategy.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace expsearch {

namespace {

struct Ear {
  std::vector<Step> steps;  // directed start -> end
  int start, end;
};

Ear reversed(const Ear& e) {
  Ear r;
  r.start = e.end;
  r.end = e.start;
  for (auto it = e.steps.rbegin(); it != e.steps.rend(); ++it) r.steps.push_back({it->arc, !it->rev});
  return r;
}

// Ears of the block: a first cycle through `entry`, then trails whose
// endpoints are already covered and whose interior is fresh.
std::vector<Ear> ear_decomposition(const RootedNetwork& net, const std::vector<int>& block_arcs,
                                   int entry) {
  std::vector<char> in_block(net.arc_count(), 0), used(net.arc_count(), 0);
  for (int a : block_arcs) in_block[a] = 1;
  std::vector<char> covered(net.node_count(), 0);
  covered[entry] = 1;
  size_t remaining = block_arcs.size();
  std::vector<Ear> ears;

  while (remaining > 0) {
    int a0 = -1, alpha = -1;
    for (int a : block_arcs) {
      if (used[a]) continue;
      const Arc& arc = net.arc(a);
      if (covered[arc.u]) {
        a0 = a;
        alpha = arc.u;
        break;
      }
      if (covered[arc.v]) {
        a0 = a;
        alpha = arc.v;
        break;
      }
    }
    if (a0 < 0)
      throw Error(Errc::not_two_arc_connected, "block arcs do not hang together");
    Ear ear;
    ear.start = alpha;
    const Arc& first = net.arc(a0);
    ear.steps.push_back({a0, first.u != alpha});
    used[a0] = 1;
    remaining--;
    int tip = first.other(alpha);
    if (first.u == first.v) tip = alpha;  // loop
    if (!covered[tip]) {
      // shortest uncovered-arc path from tip back to covered territory
      std::vector<int> via_arc(net.node_count(), -1), via_node(net.node_count(), -1);
      std::vector<char> seen(net.node_count(), 0);
      seen[tip] = 1;
      std::deque<int> queue = {tip};
      int reach = -1;
      while (!queue.empty() && reach < 0) {
        int x = queue.front();
        queue.pop_front();
        for (int a : net.arcs_at(x)) {
          if (!in_block[a] || used[a]) continue;
          const Arc& arc = net.arc(a);
          if (arc.u == arc.v) continue;
          int y = arc.other(x);
          if (seen[y]) continue;
          seen[y] = 1;
          via_arc[y] = a;
          via_node[y] = x;
          if (covered[y]) {
            reach = y;
            break;
          }
          queue.push_back(y);
        }
      }
      if (reach < 0)
        throw Error(Errc::not_two_arc_connected,
                    "no return path for arc '" + net.arc(a0).id + "'");
      std::vector<Step> tail;
      for (int y = reach; y != tip; y = via_node[y]) {
        int a = via_arc[y];
        tail.push_back({a, net.arc(a).v != y});
        used[a] = 1;
        remaining--;
      }
      std::reverse(tail.begin(), tail.end());
      for (const Step& st : tail) ear.steps.push_back(st);
      tip = reach;
    }
    ear.end = tip;
    covered[ear.start] = 1;
    for (const Step& st : ear.steps) {
      covered[net.arc(st.arc).u] = 1;
      covered[net.arc(st.arc).v] = 1;
    }
    ears.push_back(std::move(ear));
  }
  return ears;
}

}  // namespace

PureSearch reversible_block_search(const RootedNetwork& net, const std::vector<int>& block_arcs,
                                   int entry) {
  if (block_arcs.empty()) throw Error(Errc::bad_argument, "empty block");
  std::vector<Ear> ears = ear_decomposition(net, block_arcs, entry);

  std::vector<Step> seq = ears[0].steps;
  if (ears[0].end != entry)
    throw Error(Errc::not_two_arc_connected, "first ear does not close at the entry node");

  // first coverage index (0 = entry) and last incidence index, 1-based
  auto indices = [&](int node, int& first_cov, int& last_inc) {
    first_cov = node == entry ? 0 : -1;
    last_inc = node == entry ? static_cast<int>(seq.size()) + 1 : -1;
    for (int j = 0; j < static_cast<int>(seq.size()); ++j) {
      const Arc& a = net.arc(seq[j].arc);
      if (a.u == node || a.v == node) {
        if (first_cov < 0) first_cov = j + 1;
        if (node != entry) last_inc = j + 1;
      }
    }
  };

  std::deque<Ear> pending(ears.begin() + 1, ears.end());
  size_t stall = 0;
  while (!pending.empty()) {
    if (stall > pending.size())
      throw Error(Errc::not_two_arc_connected, "ear insertion made no progress");
    Ear ear = pending.front();
    pending.pop_front();
    bool placed = false;
    for (const Ear& cand : {ear, reversed(ear)}) {
      int ia, la, iw, lw;
      indices(cand.start, ia, la);
      indices(cand.end, iw, lw);
      if (ia < 0 || lw < 0) continue;
      if (ia < lw) {  // insert right after the start attachment is covered
        seq.insert(seq.begin() + ia, cand.steps.begin(), cand.steps.end());
        placed = true;
        break;
      }
    }
    if (placed) {
      stall = 0;
    } else {
      stall++;
      pending.push_back(ear);
    }
  }

  PureSearch out{std::move(seq)};
  std::vector<Step> rev;
  for (auto it = out.steps.rbegin(); it != out.steps.rend(); ++it)
    rev.push_back({it->arc, !it->rev});
  if (out.steps.size() != block_arcs.size() || out.steps.back().to(net) != entry ||
      !is_valid_trail_from(net, out.steps, entry) || !is_valid_trail_from(net, rev, entry))
    throw Error(Errc::internal, "block search construction failed");
  return out;
}

namespace {

struct BetaEmitter {
  const RootedNetwork& net;
  const Decomposition& dec;
  const std::vector<PureSearch>& block_search;
  bool mirrored;
  std::vector<char> block_done;
  std::vector<Step> out;

  BetaEmitter(const RootedNetwork& n, const Decomposition& d, const std::vector<PureSearch>& bs,
              bool m)
      : net(n), dec(d), block_search(bs), mirrored(m), block_done(d.blocks.size(), 0) {}

  void hang(int node) {
    std::vector<int> bridges = dec.child_bridges_at_node[node];
    if (mirrored) std::reverse(bridges.begin(), bridges.end());
    for (int bi : bridges) {
      const Arc& b = net.arc(bi);
      out.push_back({bi, b.u != node});
      visit(b.other(node));
    }
  }

  void visit(int node) {
    int blk = dec.comp_block[dec.comp_of_node[node]];
    if (blk < 0 || block_done[blk]) {
      hang(node);
      return;
    }
    block_done[blk] = 1;
    const auto& steps = block_search[blk].steps;
    int m = static_cast<int>(steps.size());
    int gw = dec.gateway[blk];
    // first coverage index per node along the block run (0 = the gateway)
    std::vector<std::pair<int, int>> cover;  // (index, node)
    {
      std::vector<char> seen(net.node_count(), 0);
      seen[gw] = 1;
      cover.emplace_back(0, gw);
      for (int j = 0; j < m; ++j) {
        int to = steps[j].to(net);
        if (!seen[to]) {
          seen[to] = 1;
          cover.emplace_back(j + 1, to);
        }
      }
    }
    auto hang_at = [&](int index) {
      for (const auto& [idx, nd] : cover)
        if (idx == index) hang(nd);
    };
    if (!mirrored) {
      hang_at(0);
      for (int j = 0; j < m; ++j) {
        out.push_back(steps[j]);
        hang_at(j + 1);
      }
    } else {
      for (int j = m; j >= 1; --j) {
        out.push_back({steps[j - 1].arc, !steps[j - 1].rev});
        hang_at(j - 1);
      }
    }
  }
};

}  // namespace

BetaStrategy build_beta(const RootedNetwork& net, const Decomposition& dec) {
  BetaStrategy beta;
  beta.block_search.resize(dec.blocks.size());
  for (size_t b = 0; b < dec.blocks.size(); ++b)
    beta.block_search[b] = reversible_block_search(net, dec.blocks[b], dec.gateway[b]);

  BetaEmitter fwd(net, dec, beta.block_search, false);
  fwd.visit(net.root());
  beta.s1.steps = std::move(fwd.out);
  BetaEmitter mir(net, dec, beta.block_search, true);
  mir.visit(net.root());
  beta.s2.steps = std::move(mir.out);

  if (!is_valid(net, beta.s1) || !is_valid(net, beta.s2))
    throw Error(Errc::internal, "constructed beta searches are invalid");
  return beta;
}

Rat beta_max_time(const Decomposition& dec) { return (dec.mu + dec.network_height()) / 2; }

}  // namespace expsearch
