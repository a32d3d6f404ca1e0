#include "tree_game.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace expsearch {

TreeStructure tree_structure(const RootedNetwork& net) {
  if (net.arc_count() != net.node_count() - 1)
    throw Error(Errc::not_a_tree, "network has " + std::to_string(net.arc_count()) + " arcs and " +
                                      std::to_string(net.node_count()) + " nodes");
  TreeStructure ts;
  int n = net.node_count();
  ts.parent_arc.assign(n, -1);
  ts.parent_node.assign(n, -1);
  ts.child_arcs.assign(n, {});
  ts.arc_child.assign(net.arc_count(), -1);
  ts.depth.assign(n, Rat(0));

  std::vector<char> seen(n, 0);
  std::vector<int> order = {net.root()};
  seen[net.root()] = 1;
  for (size_t k = 0; k < order.size(); ++k) {
    int v = order[k];
    for (int ai : net.arcs_at(v)) {
      const Arc& a = net.arc(ai);
      if (a.u == a.v) throw Error(Errc::not_a_tree, "loop arc '" + a.id + "'");
      int w = a.other(v);
      if (seen[w]) continue;
      seen[w] = 1;
      ts.parent_arc[w] = ai;
      ts.parent_node[w] = v;
      ts.child_arcs[v].push_back(ai);
      ts.arc_child[ai] = w;
      ts.depth[w] = ts.depth[v] + a.length;
      order.push_back(w);
    }
  }
  for (int v = 0; v < n; ++v)
    if (!seen[v]) throw Error(Errc::not_a_tree, "disconnected node '" + net.node_name(v) + "'");

  ts.branch_mu.assign(net.arc_count(), Rat(0));
  ts.branch_D.assign(net.arc_count(), Rat(0));
  // children first
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    if (ts.child_arcs[v].empty()) ts.leaves.push_back(v);
    if (ts.parent_arc[v] < 0) continue;
    Rat mu_sub = 0, d_sub = 0;
    for (int ci : ts.child_arcs[v]) mu_sub += ts.branch_mu[ci];
    for (int ci : ts.child_arcs[v])
      if (mu_sub > 0) d_sub += (ts.branch_mu[ci] / mu_sub) * ts.branch_D[ci];
    const Arc& pa = net.arc(ts.parent_arc[v]);
    ts.branch_mu[ts.parent_arc[v]] = pa.length + mu_sub;
    ts.branch_D[ts.parent_arc[v]] = pa.length + d_sub;
  }
  std::sort(ts.leaves.begin(), ts.leaves.end());
  if (ts.leaves.empty() || (ts.leaves.size() == 1 && ts.leaves[0] == net.root()))
    throw Error(Errc::not_a_tree, "tree has no leaves besides the root");
  return ts;
}

std::vector<std::pair<int, Rat>> ebd(const RootedNetwork& net) {
  TreeStructure ts = tree_structure(net);
  std::vector<Rat> mass(net.node_count(), Rat(0));
  mass[net.root()] = 1;
  // waterfall in BFS order: split arriving mass in proportion to branch length
  std::vector<int> order = {net.root()};
  for (size_t k = 0; k < order.size(); ++k) {
    int v = order[k];
    if (ts.child_arcs[v].empty()) continue;
    Rat mu_sub = 0;
    for (int ci : ts.child_arcs[v]) mu_sub += ts.branch_mu[ci];
    for (int ci : ts.child_arcs[v]) {
      int w = ts.arc_child[ci];
      mass[w] = mass[v] * ts.branch_mu[ci] / mu_sub;
      order.push_back(w);
    }
  }
  std::vector<std::pair<int, Rat>> out;
  for (int leaf : ts.leaves) out.emplace_back(leaf, mass[leaf]);
  return out;
}

Rat ebd_distance(const RootedNetwork& net) {
  TreeStructure ts = tree_structure(net);
  Rat mu_sub = 0, d = 0;
  for (int ci : ts.child_arcs[net.root()]) mu_sub += ts.branch_mu[ci];
  for (int ci : ts.child_arcs[net.root()]) d += (ts.branch_mu[ci] / mu_sub) * ts.branch_D[ci];
  return d;
}

Rat tree_value(const RootedNetwork& net) {
  return (net.total_measure() + ebd_distance(net)) / 2;
}

BiasedDfs::BiasedDfs(const RootedNetwork& net, TreeStructure ts) : ts_(std::move(ts)) {
  int n = net.node_count();
  stage_prob_.assign(n, {});
  first_probs_.assign(n, {});
  for (int v = 0; v < n; ++v) {
    const auto& kids = ts_.child_arcs[v];
    int k = static_cast<int>(kids.size());
    if (k < 2) {
      if (k == 1) first_probs_[v].emplace_back(kids[0], Rat(1));
      continue;
    }
    // suffix measures and D values of the combined remainder
    std::vector<Rat> suf_mu(k + 1, Rat(0)), suf_wd(k + 1, Rat(0));
    for (int i = k - 1; i >= 0; --i) {
      suf_mu[i] = suf_mu[i + 1] + ts_.branch_mu[kids[i]];
      suf_wd[i] = suf_wd[i + 1] + ts_.branch_mu[kids[i]] * ts_.branch_D[kids[i]];
    }
    std::vector<Rat>& q = stage_prob_[v];
    q.resize(k - 1);
    for (int i = 0; i + 1 < k; ++i) {
      Rat rest_D = suf_wd[i + 1] / suf_mu[i + 1];
      Rat mu_stage = suf_mu[i];
      q[i] = Rat(1, 2) + (ts_.branch_D[kids[i]] - rest_D) / (2 * mu_stage);
    }
    Rat none_yet = 1;
    for (int i = 0; i < k; ++i) {
      Rat p = (i + 1 < k) ? none_yet * q[i] : none_yet;
      first_probs_[v].emplace_back(kids[i], p);
      if (i + 1 < k) none_yet *= 1 - q[i];
    }
  }
}

Rat BiasedDfs::prob_before(int node, int arc_a, int arc_b) const {
  const auto& kids = ts_.child_arcs[node];
  auto pos = [&](int arc) {
    auto it = std::find(kids.begin(), kids.end(), arc);
    if (it == kids.end()) throw Error(Errc::bad_argument, "arc is not a branch of this node");
    return static_cast<int>(it - kids.begin());
  };
  int ia = pos(arc_a), ib = pos(arc_b);
  if (ia == ib) throw Error(Errc::bad_argument, "identical branches");
  // branch i is either before or after the whole remainder of stage i
  if (ia < ib) return stage_prob_[node][ia];
  return 1 - stage_prob_[node][ib];
}

Rat BiasedDfs::time_to(const RootedNetwork& net, const Point& h) const {
  // Locate the arc carrying h and the progress along it (in root-to-leaf
  // direction); nodes count as the end of their parent arc.
  int arc;
  Rat along;
  if (auto nd = point_node(net, h)) {
    if (*nd == net.root()) return 0;
    arc = ts_.parent_arc[*nd];
    along = net.arc(arc).length;
  } else {
    arc = h.arc;
    const Arc& a = net.arc(arc);
    along = (ts_.arc_child[arc] == a.v) ? h.offset : a.length - h.offset;
  }
  int child = ts_.arc_child[arc];
  int v = ts_.parent_node[child];
  Rat t = ts_.depth[v] + along;
  // off-path branches hanging at ancestors, weighted by order probabilities
  int down_arc = arc;
  while (v >= 0) {
    for (int sib : ts_.child_arcs[v]) {
      if (sib == down_arc) continue;
      t += ts_.branch_mu[sib] * prob_before(v, sib, down_arc);
    }
    down_arc = ts_.parent_arc[v];
    v = ts_.parent_node[v];
  }
  return t;
}

std::shared_ptr<BiasedDfs> biased_dfs(const RootedNetwork& net) {
  return std::make_shared<BiasedDfs>(net, tree_structure(net));
}

TreeGameSolution solve_tree_game(const RootedNetwork& net) {
  TreeGameSolution sol;
  sol.ebd = ebd(net);
  sol.D = ebd_distance(net);
  sol.value = (net.total_measure() + sol.D) / 2;
  sol.searcher = biased_dfs(net);
  return sol;
}

namespace {

// Splits arcs at the given interior offsets in one pass. Returns the new
// network plus, per original arc, the ordered list of (piece arc id, piece
// start offset).
struct SplitMap {
  RootedNetwork net;
  std::vector<std::vector<std::pair<int, Rat>>> pieces;  // per original arc
};

SplitMap multi_subdivide(const RootedNetwork& net, const std::vector<std::vector<Rat>>& cuts) {
  std::vector<std::string> nodes;
  for (int v = 0; v < net.node_count(); ++v) nodes.push_back(net.node_name(v));
  std::vector<ArcInput> arcs;
  std::vector<std::vector<std::pair<std::string, Rat>>> piece_ids(net.arc_count());
  for (int i = 0; i < net.arc_count(); ++i) {
    const Arc& a = net.arc(i);
    std::vector<Rat> offs = cuts[i];
    std::sort(offs.begin(), offs.end());
    offs.erase(std::unique(offs.begin(), offs.end()), offs.end());
    while (!offs.empty() && offs.front() <= 0) offs.erase(offs.begin());
    while (!offs.empty() && offs.back() >= a.length) offs.pop_back();
    if (offs.empty()) {
      arcs.push_back({a.id, net.node_name(a.u), net.node_name(a.v), a.length});
      piece_ids[i].emplace_back(a.id, Rat(0));
      continue;
    }
    std::string prev = net.node_name(a.u);
    Rat start = 0;
    for (size_t k = 0; k <= offs.size(); ++k) {
      Rat end = (k < offs.size()) ? offs[k] : a.length;
      std::string piece = a.id + "#" + std::to_string(k);
      std::string nxt = (k < offs.size()) ? a.id + "@" + rat_str(offs[k]) : net.node_name(a.v);
      if (k < offs.size()) nodes.push_back(nxt);
      arcs.push_back({piece, prev, nxt, end - start});
      piece_ids[i].emplace_back(piece, start);
      prev = nxt;
      start = end;
    }
  }
  SplitMap out;
  out.net = RootedNetwork::build(net.root_name(), nodes, arcs);
  out.pieces.resize(net.arc_count());
  for (int i = 0; i < net.arc_count(); ++i)
    for (auto& [id, start] : piece_ids[i])
      out.pieces[i].emplace_back(*out.net.find_arc(id), start);
  return out;
}

}  // namespace

BayesResult bayes_tree_search(const RootedNetwork& net, const HiderDistribution& hider) {
  validate_hider(net, hider);
  std::vector<std::vector<Rat>> cuts(net.arc_count());
  for (const auto& a : hider.atoms)
    if (!point_node(net, a.at)) cuts[a.at.arc].push_back(a.at.offset);
  for (const auto& u : hider.uniforms) {
    cuts[u.arc].push_back(u.lo);
    cuts[u.arc].push_back(u.hi);
  }
  SplitMap sm = multi_subdivide(net, cuts);
  const RootedNetwork& work = sm.net;
  TreeStructure ts = tree_structure(work);

  // Per working arc: atom weight (found at completion) and uniform weight
  // (found mid-pass, costing completion minus half the length).
  int m = work.arc_count();
  std::vector<Rat> atom_w(m, Rat(0)), unif_w(m, Rat(0));
  auto piece_at = [&](int orig_arc, const Rat& off) {
    const auto& ps = sm.pieces[orig_arc];
    for (size_t k = 0; k < ps.size(); ++k) {
      Rat end = (k + 1 < ps.size()) ? ps[k + 1].second : net.arc(orig_arc).length;
      if (off <= end) return std::make_pair(ps[k].first, off - ps[k].second);
    }
    throw Error(Errc::internal, "offset outside arc after subdivision");
  };
  for (const auto& a : hider.atoms) {
    if (a.mass == 0) continue;
    auto [piece, off] = piece_at(a.at.arc, a.at.offset);
    const Arc& pa = work.arc(piece);
    int node;
    if (off == 0)
      node = pa.u;
    else if (off == pa.length)
      node = pa.v;
    else
      throw Error(Errc::internal, "atom not on a node after subdivision");
    if (node == work.root()) continue;  // found at time zero
    atom_w[ts.parent_arc[node]] += a.mass;
  }
  for (const auto& u : hider.uniforms) {
    if (u.mass == 0 || u.hi == u.lo) continue;
    for (const auto& [piece, start] : sm.pieces[u.arc]) {
      const Arc& pa = work.arc(piece);
      Rat piece_end = start + pa.length;
      Rat lo = std::max(u.lo, start);
      Rat hi = std::min(u.hi, piece_end);
      if (hi > lo) unif_w[piece] += u.mass * (hi - lo) / (u.hi - u.lo);
    }
  }

  // Highest-density merging under out-tree precedence: repeatedly absorb the
  // densest remaining composite into whatever currently holds its parent arc.
  struct Composite {
    std::vector<int> arcs;
    Rat len, wt;
    bool alive = true;
  };
  std::vector<Composite> comps;
  std::vector<int> comp_of_arc(m, -1);
  for (int a = 0; a < m; ++a) {
    comps.push_back({{a}, work.arc(a).length, atom_w[a] + unif_w[a], true});
    comp_of_arc[a] = a;
  }
  int root_comp = -1;  // virtual: arcs whose order is already fixed at the front
  std::vector<int> schedule;
  auto resolve = [&](int a) {
    int c = comp_of_arc[a];
    return c;
  };
  int remaining = m;
  while (remaining > 0) {
    int best = -1;
    for (int c = 0; c < static_cast<int>(comps.size()); ++c) {
      if (!comps[c].alive) continue;
      if (best < 0) {
        best = c;
        continue;
      }
      // compare wt/len, canonical first-arc index breaking ties
      Rat lhs = comps[c].wt * comps[best].len;
      Rat rhs = comps[best].wt * comps[c].len;
      if (lhs > rhs || (lhs == rhs && comps[c].arcs.front() < comps[best].arcs.front())) best = c;
    }
    Composite& b = comps[best];
    b.alive = false;
    remaining--;
    int head = b.arcs.front();
    int parent_node = work.arc(head).other(ts.arc_child[head]);
    if (parent_node == work.root() || ts.parent_arc[parent_node] < 0 ||
        comp_of_arc[ts.parent_arc[parent_node]] == root_comp) {
      // attaches directly behind the already scheduled prefix
      for (int a : b.arcs) {
        schedule.push_back(a);
        comp_of_arc[a] = root_comp;
      }
      // composites hanging off the newly fixed arcs may now also be root-bound;
      // they keep their own entries, resolved when selected
    } else {
      int pc = resolve(ts.parent_arc[parent_node]);
      Composite& p = comps[pc];
      for (int a : b.arcs) {
        p.arcs.push_back(a);
        comp_of_arc[a] = pc;
      }
      p.len += b.len;
      p.wt += b.wt;
    }
  }

  BayesResult out;
  out.search.steps.reserve(m);
  Rat t = 0, value = 0;
  for (int a : schedule) {
    const Arc& wa = work.arc(a);
    bool rev = (ts.arc_child[a] == wa.u);
    out.search.steps.push_back({a, rev});
    t += wa.length;
    value += atom_w[a] * t + unif_w[a] * (t - wa.length / 2);
  }
  out.value = value;
  out.net = work;
  if (!is_valid(work, out.search))
    throw Error(Errc::internal, "merge schedule violated tree precedence");
  return out;
}

}  // namespace expsearch
