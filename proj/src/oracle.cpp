#include "oracle.hpp"

#include <algorithm>
#include <random>
#include <unordered_map>

namespace expsearch {

std::vector<Point> hider_candidates(const RootedNetwork& net, const Decomposition& dec,
                                    const Rat& h, bool no_dominance) {
  if (h <= 0) throw Error(Errc::bad_argument, "grid step must be positive");
  std::vector<Point> out;
  for (int c : dec.leaf_components())
    if (dec.comp_block[c] < 0) out.push_back(node_point(net, dec.comp_root_node[c]));

  auto add_grid = [&](int arc) {
    const Rat& len = net.arc(arc).length;
    Rat q = len / h;
    BigInt k = numerator(q) / denominator(q);
    if (k * denominator(q) != numerator(q)) k += 1;
    if (k < 1) k = 1;
    for (BigInt t = 1; t <= k; ++t)
      out.push_back({arc, len * (2 * Rat(t) - 1) / (2 * Rat(k))});
  };
  for (int a = 0; a < net.arc_count(); ++a)
    if (!dec.is_bridge[a]) add_grid(a);

  if (no_dominance) {
    for (int v = 0; v < net.node_count(); ++v) {
      if (v == net.root()) continue;
      Point p = node_point(net, v);
      bool dup = false;
      for (const Point& q2 : out)
        if (same_point(net, p, q2)) dup = true;
      if (!dup) out.push_back(p);
    }
    for (int a = 0; a < net.arc_count(); ++a)
      if (dec.is_bridge[a]) add_grid(a);
  }
  return out;
}

namespace {

struct Enumerator {
  const RootedNetwork& net;
  std::size_t cap;
  const std::function<void(const PureSearch&)>& fn;
  std::vector<char> covered, used;
  PureSearch current;
  std::size_t count = 0;

  Enumerator(const RootedNetwork& n, std::size_t c, const std::function<void(const PureSearch&)>& f)
      : net(n), cap(c), fn(f), covered(n.node_count(), 0), used(n.arc_count(), 0) {}

  void run() {
    covered[net.root()] = 1;
    extend(0);
  }

  void extend(int depth) {
    if (depth == net.arc_count()) {
      if (++count > cap)
        throw Error(Errc::cap_exceeded, "search count exceeds cap of " + std::to_string(cap) +
                                            " searches");
      fn(current);
      return;
    }
    for (int a = 0; a < net.arc_count(); ++a) {
      if (used[a]) continue;
      const Arc& arc = net.arc(a);
      for (int dir = 0; dir < 2; ++dir) {
        bool rev = dir == 1;
        int from = rev ? arc.v : arc.u;
        int to = rev ? arc.u : arc.v;
        if (!covered[from]) continue;
        used[a] = 1;
        char had = covered[to];
        covered[to] = 1;
        current.steps.push_back({a, rev});
        extend(depth + 1);
        current.steps.pop_back();
        covered[to] = had;
        used[a] = 0;
      }
    }
  }
};

}  // namespace

void for_each_search(const RootedNetwork& net, std::size_t cap,
                     const std::function<void(const PureSearch&)>& fn) {
  Enumerator e(net, cap, fn);
  e.run();
}

std::vector<PureSearch> enumerate_searches(const RootedNetwork& net, std::size_t cap) {
  std::vector<PureSearch> out;
  for_each_search(net, cap, [&](const PureSearch& s) { out.push_back(s); });
  return out;
}

namespace {

// Exact primal simplex for max c.x s.t. A x <= b, x >= 0 with b >= 0 (the
// origin is feasible). Bland's rule keeps it finite.
struct SimplexOut {
  Rat obj;
  std::vector<Rat> x;
  std::vector<Rat> dual;
};

SimplexOut simplex_max(const std::vector<std::vector<Rat>>& A, const std::vector<Rat>& b,
                       const std::vector<Rat>& c) {
  int m = static_cast<int>(A.size());
  int n = static_cast<int>(c.size());
  std::vector<std::vector<Rat>> T(m + 1, std::vector<Rat>(n + m + 1, Rat(0)));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) T[i][j] = A[i][j];
    T[i][n + i] = 1;
    T[i][n + m] = b[i];
  }
  for (int j = 0; j < n; ++j) T[m][j] = -c[j];
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) basis[i] = n + i;

  while (true) {
    int enter = -1;
    for (int j = 0; j < n + m; ++j)
      if (T[m][j] < 0) {
        enter = j;
        break;
      }
    if (enter < 0) break;
    int leave = -1;
    for (int i = 0; i < m; ++i) {
      if (T[i][enter] <= 0) continue;
      if (leave < 0) {
        leave = i;
        continue;
      }
      Rat lhs = T[i][n + m] * T[leave][enter];
      Rat rhs = T[leave][n + m] * T[i][enter];
      if (lhs < rhs || (lhs == rhs && basis[i] < basis[leave])) leave = i;
    }
    if (leave < 0) throw Error(Errc::internal, "unbounded game LP");
    Rat piv = T[leave][enter];
    for (auto& val : T[leave]) val /= piv;
    for (int i = 0; i <= m; ++i) {
      if (i == leave) continue;
      Rat f = T[i][enter];
      if (f == 0) continue;
      for (int j = 0; j <= n + m; ++j)
        if (T[leave][j] != 0) T[i][j] -= f * T[leave][j];
    }
    basis[leave] = enter;
  }

  SimplexOut out;
  out.obj = T[m][n + m];
  out.x.assign(n, Rat(0));
  for (int i = 0; i < m; ++i)
    if (basis[i] < n) out.x[basis[i]] = T[i][n + m];
  out.dual.assign(m, Rat(0));
  for (int i = 0; i < m; ++i) out.dual[i] = T[m][n + i];
  return out;
}

}  // namespace

GameSolution solve_matrix_game(const std::vector<std::vector<Rat>>& payoff) {
  if (payoff.empty() || payoff[0].empty()) throw Error(Errc::bad_argument, "empty payoff matrix");
  std::size_t m = payoff.size(), n = payoff[0].size();
  for (const auto& row : payoff)
    if (row.size() != n) throw Error(Errc::bad_argument, "ragged payoff matrix");

  Rat min_entry = payoff[0][0];
  for (const auto& row : payoff)
    for (const Rat& v : row) min_entry = std::min(min_entry, v);
  Rat shift = (min_entry <= 0) ? 1 - min_entry : Rat(0);

  auto entry = [&](std::size_t i, std::size_t j) { return payoff[i][j] + shift; };

  std::vector<std::size_t> active = {0};
  std::vector<char> in_active(m, 0);
  in_active[0] = 1;
  GameSolution sol;
  std::size_t guard = 0;
  while (true) {
    if (++guard > m + 1) throw Error(Errc::internal, "row generation failed to terminate");
    // columns of the game are the LP constraints; active rows the variables
    std::vector<std::vector<Rat>> A(n, std::vector<Rat>(active.size()));
    for (std::size_t jc = 0; jc < n; ++jc)
      for (std::size_t ir = 0; ir < active.size(); ++ir) A[jc][ir] = entry(active[ir], jc);
    std::vector<Rat> b(n, Rat(1)), c(active.size(), Rat(1));
    SimplexOut lp = simplex_max(A, b, c);
    if (lp.obj <= 0) throw Error(Errc::internal, "degenerate game LP");
    Rat vprime = 1 / lp.obj;

    std::vector<Rat> q(n);
    for (std::size_t j = 0; j < n; ++j) q[j] = lp.dual[j] * vprime;

    // best searcher response against q over all rows
    std::size_t best_i = 0;
    Rat best;
    for (std::size_t i = 0; i < m; ++i) {
      Rat s = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (q[j] != 0) s += entry(i, j) * q[j];
      if (i == 0 || s < best) {
        best = s;
        best_i = i;
      }
    }
    if (best >= vprime) {
      sol.value = vprime - shift;
      sol.row_mix.assign(m, Rat(0));
      for (std::size_t ir = 0; ir < active.size(); ++ir)
        sol.row_mix[active[ir]] = lp.x[ir] * vprime;
      sol.col_mix = std::move(q);
      sol.gap = 0;
      sol.iterations = guard;
      break;
    }
    if (in_active[best_i]) throw Error(Errc::internal, "active row re-proposed");
    in_active[best_i] = 1;
    active.push_back(best_i);
  }

  // certify both guarantees exactly
  Rat mix_total = 0;
  for (const Rat& p : sol.row_mix) mix_total += p;
  Rat col_total = 0;
  for (const Rat& p : sol.col_mix) col_total += p;
  if (mix_total != 1 || col_total != 1)
    throw Error(Errc::internal, "certificate mixes do not normalize");
  for (std::size_t j = 0; j < n; ++j) {
    Rat s = 0;
    for (std::size_t i = 0; i < m; ++i)
      if (sol.row_mix[i] != 0) s += payoff[i][j] * sol.row_mix[i];
    if (s > sol.value) throw Error(Errc::internal, "searcher certificate failed");
  }
  return sol;
}

GameSolution solve_matrix_game_fictitious(const std::vector<std::vector<Rat>>& payoff, double eps,
                                          std::uint64_t max_iters, std::uint64_t seed) {
  if (payoff.empty() || payoff[0].empty()) throw Error(Errc::bad_argument, "empty payoff matrix");
  std::size_t m = payoff.size(), n = payoff[0].size();
  std::vector<std::vector<double>> M(m, std::vector<double>(n));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) M[i][j] = rat_double(payoff[i][j]);

  std::mt19937_64 rng(seed);
  std::vector<double> row_cnt(m, 0), col_cnt(n, 0);
  std::vector<double> row_payoff(m, 0);  // against accumulated column play
  std::vector<double> col_payoff(n, 0);  // against accumulated row play
  auto pick = [&rng](const std::vector<double>& v, bool minimize) {
    double best = v[0];
    for (double x : v) best = minimize ? std::min(best, x) : std::max(best, x);
    std::vector<std::size_t> ties;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (std::abs(v[i] - best) <= 1e-12 * (1 + std::abs(best))) ties.push_back(i);
    return ties[rng() % ties.size()];
  };

  // best certified guarantees seen so far; the snapshots pair into a valid
  // certificate because each side's bound is independent of the other mix
  double best_ub = 1e300, best_lb = -1e300;
  std::vector<double> best_row_cnt, best_col_cnt;
  double best_row_t = 1, best_col_t = 1;

  std::size_t r = 0, c0 = 0;
  for (std::uint64_t t = 1; t <= max_iters; ++t) {
    r = pick(row_payoff, true);
    row_cnt[r] += 1;
    for (std::size_t j = 0; j < n; ++j) col_payoff[j] += M[r][j];
    c0 = pick(col_payoff, false);
    col_cnt[c0] += 1;
    for (std::size_t i = 0; i < m; ++i) row_payoff[i] += M[i][c0];
    if (t % 128 == 0 || t == max_iters) {
      double ub = -1e300, lb = 1e300;
      for (std::size_t j = 0; j < n; ++j) ub = std::max(ub, col_payoff[j] / t);
      for (std::size_t i = 0; i < m; ++i) lb = std::min(lb, row_payoff[i] / t);
      if (ub < best_ub) {
        best_ub = ub;
        best_row_cnt = row_cnt;
        best_row_t = static_cast<double>(t);
      }
      if (lb > best_lb) {
        best_lb = lb;
        best_col_cnt = col_cnt;
        best_col_t = static_cast<double>(t);
      }
      if (best_ub - best_lb <= eps) {
        GameSolution sol;
        sol.value = Rat((best_ub + best_lb) / 2);
        sol.gap = Rat(best_ub - best_lb);
        sol.iterations = t;
        sol.row_mix.resize(m);
        sol.col_mix.resize(n);
        for (std::size_t i = 0; i < m; ++i) sol.row_mix[i] = Rat(best_row_cnt[i] / best_row_t);
        for (std::size_t j = 0; j < n; ++j) sol.col_mix[j] = Rat(best_col_cnt[j] / best_col_t);
        return sol;
      }
    }
  }
  throw Error(Errc::no_convergence,
              "fictitious play missed eps after " + std::to_string(max_iters) + " iterations");
}

namespace {

struct RowBuilder {
  const RootedNetwork& net;
  std::vector<std::vector<std::pair<int, Rat>>> on_arc;  // arc -> (candidate, offset)
  std::vector<int> at_node;                              // node -> candidate or -1
  std::vector<Rat> row;
  std::vector<char> filled;
  std::vector<int> trail;

  RowBuilder(const RootedNetwork& n, const std::vector<Point>& candidates)
      : net(n), on_arc(n.arc_count()), at_node(n.node_count(), -1) {
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      const Point& p = candidates[k];
      if (auto nd = point_node(net, p))
        at_node[*nd] = static_cast<int>(k);
      else
        on_arc[p.arc].emplace_back(static_cast<int>(k), p.offset);
    }
    row.assign(candidates.size(), Rat(0));
    filled.assign(candidates.size(), 0);
    if (net.root() >= 0 && at_node[net.root()] >= 0) {
      filled[at_node[net.root()]] = 1;  // found at time zero, stays zero
    }
  }

  void fill(int idx, const Rat& t) {
    if (filled[idx]) return;
    filled[idx] = 1;
    row[idx] = t;
    trail.push_back(idx);
  }

  // returns how many fills to undo
  std::size_t push(const Step& st, const Rat& t_begin) {
    std::size_t mark = trail.size();
    const Arc& arc = net.arc(st.arc);
    for (const auto& [idx, off] : on_arc[st.arc])
      fill(idx, t_begin + (st.rev ? arc.length - off : off));
    int to = st.to(net);
    if (at_node[to] >= 0) fill(at_node[to], t_begin + arc.length);
    return trail.size() - mark;
  }

  void pop(std::size_t count) {
    while (count--) {
      filled[trail.back()] = 0;
      trail.pop_back();
    }
  }
};

struct RowHash {
  std::size_t operator()(const std::vector<Rat>& row) const {
    std::size_t h = 1469598103934665603ull;
    std::hash<double> hd;
    for (const Rat& v : row) {
      h ^= hd(rat_double(v));
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace

OracleMatrix oracle_matrix(const RootedNetwork& net, const Rat& h, std::size_t cap,
                           bool no_dominance) {
  OracleMatrix out;
  Decomposition dec = decompose(net);
  out.candidates = hider_candidates(net, dec, h, no_dominance);
  out.searches = enumerate_searches(net, cap);
  out.payoff.reserve(out.searches.size());
  for (const auto& s : out.searches) {
    std::vector<Rat> row;
    row.reserve(out.candidates.size());
    for (const Point& p : out.candidates) row.push_back(search_time(net, s, p));
    out.payoff.push_back(std::move(row));
  }
  return out;
}

namespace {

// Common denominator for all search times: every reach time is a sum of arc
// lengths plus one candidate offset, so its denominator divides this lcm.
// Returns 0 when the scaled values would not fit comfortably in int64.
BigInt time_scale(const RootedNetwork& net, const std::vector<Point>& candidates) {
  BigInt l = 1;
  auto fold = [&l](const Rat& v) { l = lcm(l, denominator(v)); };
  for (const Arc& a : net.arcs()) fold(a.length);
  for (const Point& p : candidates) fold(p.offset);
  if (l > BigInt(1) << 24) return 0;
  Rat span = net.total_measure() * Rat(l);
  if (numerator(span) > BigInt(1) << 56) return 0;
  return l;
}

// Row-generation solve over scaled-integer rows: the small active LP runs in
// exact rationals while the full-matrix best-response scans stay in integers.
GameSolution solve_rows_int(const std::vector<std::int64_t>& arena, std::size_t n_rows,
                            std::size_t n_cols, const BigInt& scale) {
  auto entry = [&](std::size_t i, std::size_t j) { return arena[i * n_cols + j]; };
  std::vector<std::size_t> active = {0};
  std::vector<char> in_active(n_rows, 0);
  in_active[0] = 1;
  GameSolution sol;
  std::size_t guard = 0;
  while (true) {
    if (++guard > n_rows + 1) throw Error(Errc::internal, "row generation failed to terminate");
    std::vector<std::vector<Rat>> sub(active.size(), std::vector<Rat>(n_cols));
    for (std::size_t ir = 0; ir < active.size(); ++ir)
      for (std::size_t j = 0; j < n_cols; ++j)
        sub[ir][j] = Rat(BigInt(entry(active[ir], j)), scale);
    GameSolution restricted = solve_matrix_game(sub);
    const std::vector<Rat>& q = restricted.col_mix;

    // integer best-response scan: compare sum_j M[i][j] qnum[j] against value
    BigInt qden = 1;
    for (const Rat& p : q) qden = lcm(qden, denominator(p));
    std::vector<BigInt> qnum(n_cols);
    for (std::size_t j = 0; j < n_cols; ++j) qnum[j] = numerator(q[j]) * (qden / denominator(q[j]));
    std::size_t best_i = 0;
    BigInt best;
    bool first = true;
    for (std::size_t i = 0; i < n_rows; ++i) {
      BigInt s = 0;
      for (std::size_t j = 0; j < n_cols; ++j)
        if (qnum[j] != 0) s += qnum[j] * entry(i, j);
      if (first || s < best) {
        best = s;
        best_i = i;
        first = false;
      }
    }
    // best/(qden*scale) >= value ?
    Rat best_rat = Rat(best, qden * scale);
    if (best_rat >= restricted.value) {
      sol.value = restricted.value;
      sol.row_mix.assign(n_rows, Rat(0));
      for (std::size_t ir = 0; ir < active.size(); ++ir)
        sol.row_mix[active[ir]] = restricted.row_mix[ir];
      sol.col_mix = q;
      sol.gap = 0;
      sol.iterations = guard;
      return sol;
    }
    if (in_active[best_i]) throw Error(Errc::internal, "active row re-proposed");
    in_active[best_i] = 1;
    active.push_back(best_i);
  }
}

}  // namespace

OracleResult oracle_value(const RootedNetwork& net, const Rat& h, double eps, std::size_t cap,
                          bool no_dominance, bool exact, std::uint64_t seed) {
  OracleResult res;
  res.h = h;
  res.eps = eps;
  res.exact = exact;
  Decomposition dec = decompose(net);
  res.candidates = hider_candidates(net, dec, h, no_dominance);
  if (res.candidates.empty()) throw Error(Errc::bad_argument, "no hider candidates");
  std::size_t n_cols = res.candidates.size();

  BigInt scale = time_scale(net, res.candidates);
  std::vector<PureSearch> reps;
  std::size_t count = 0;
  std::vector<char> used(net.arc_count(), 0), covered(net.node_count(), 0);
  covered[net.root()] = 1;
  PureSearch current;

  // fast path: scaled-integer rows in a flat arena with exact dedup
  std::vector<std::int64_t> arena;
  std::vector<std::vector<Rat>> rat_rows;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets;

  if (scale != 0) {
    std::vector<std::int64_t> arc_len(net.arc_count());
    for (int a = 0; a < net.arc_count(); ++a)
      arc_len[a] = (net.arc(a).length * Rat(scale)).convert_to<std::int64_t>();
    // per arc: candidate fills; per node: candidate index
    std::vector<std::vector<std::pair<int, std::int64_t>>> on_arc(net.arc_count());
    std::vector<int> at_node(net.node_count(), -1);
    for (std::size_t k = 0; k < res.candidates.size(); ++k) {
      const Point& p = res.candidates[k];
      if (auto nd = point_node(net, p))
        at_node[*nd] = static_cast<int>(k);
      else
        on_arc[p.arc].emplace_back(static_cast<int>(k),
                                   (p.offset * Rat(scale)).convert_to<std::int64_t>());
    }
    std::vector<std::int64_t> row(n_cols, 0);
    std::vector<char> filled(n_cols, 0);
    std::vector<int> trail;
    if (at_node[net.root()] >= 0) filled[at_node[net.root()]] = 1;

    auto emit_row = [&]() {
      std::uint64_t hsh = 1469598103934665603ull;
      for (std::size_t j = 0; j < n_cols; ++j) {
        hsh ^= static_cast<std::uint64_t>(row[j]);
        hsh *= 1099511628211ull;
      }
      auto& bucket = buckets[hsh];
      for (std::size_t idx : bucket) {
        bool same = true;
        for (std::size_t j = 0; j < n_cols && same; ++j)
          if (arena[idx * n_cols + j] != row[j]) same = false;
        if (same) return;
      }
      bucket.push_back(reps.size());
      arena.insert(arena.end(), row.begin(), row.end());
      reps.push_back(current);
    };

    std::function<void(std::int64_t)> extend = [&](std::int64_t t) {
      if (static_cast<int>(current.steps.size()) == net.arc_count()) {
        if (++count > cap)
          throw Error(Errc::cap_exceeded,
                      "search count exceeds cap of " + std::to_string(cap) + " searches");
        emit_row();
        return;
      }
      for (int a = 0; a < net.arc_count(); ++a) {
        if (used[a]) continue;
        const Arc& arc = net.arc(a);
        for (int dir = 0; dir < 2; ++dir) {
          bool rev = dir == 1;
          int from = rev ? arc.v : arc.u;
          int to = rev ? arc.u : arc.v;
          if (!covered[from]) continue;
          used[a] = 1;
          char had = covered[to];
          covered[to] = 1;
          current.steps.push_back({a, rev});
          std::size_t mark = trail.size();
          for (const auto& [idx, off] : on_arc[a])
            if (!filled[idx]) {
              filled[idx] = 1;
              row[idx] = t + (rev ? arc_len[a] - off : off);
              trail.push_back(idx);
            }
          if (at_node[to] >= 0 && !filled[at_node[to]]) {
            filled[at_node[to]] = 1;
            row[at_node[to]] = t + arc_len[a];
            trail.push_back(at_node[to]);
          }
          extend(t + arc_len[a]);
          while (trail.size() > mark) {
            filled[trail.back()] = 0;
            trail.pop_back();
          }
          current.steps.pop_back();
          covered[to] = had;
          used[a] = 0;
        }
      }
    };
    extend(0);
  } else {
    RowBuilder builder(net, res.candidates);
    RowHash hasher;
    std::function<void(const Rat&)> extend = [&](const Rat& t) {
      if (static_cast<int>(current.steps.size()) == net.arc_count()) {
        if (++count > cap)
          throw Error(Errc::cap_exceeded,
                      "search count exceeds cap of " + std::to_string(cap) + " searches");
        std::size_t hsh = hasher(builder.row);
        auto& bucket = buckets[hsh];
        for (std::size_t idx : bucket)
          if (rat_rows[idx] == builder.row) return;
        bucket.push_back(rat_rows.size());
        rat_rows.push_back(builder.row);
        reps.push_back(current);
        return;
      }
      for (int a = 0; a < net.arc_count(); ++a) {
        if (used[a]) continue;
        const Arc& arc = net.arc(a);
        for (int dir = 0; dir < 2; ++dir) {
          bool rev = dir == 1;
          int from = rev ? arc.v : arc.u;
          int to = rev ? arc.u : arc.v;
          if (!covered[from]) continue;
          used[a] = 1;
          char had = covered[to];
          covered[to] = 1;
          current.steps.push_back({a, rev});
          std::size_t undo = builder.push({a, rev}, t);
          extend(t + arc.length);
          builder.pop(undo);
          current.steps.pop_back();
          covered[to] = had;
          used[a] = 0;
        }
      }
    };
    extend(Rat(0));
  }

  res.searches_enumerated = count;
  res.distinct_rows = reps.size();

  GameSolution game;
  if (!exact) {
    if (rat_rows.empty() && scale != 0) {
      rat_rows.assign(reps.size(), std::vector<Rat>(n_cols));
      for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t j = 0; j < n_cols; ++j)
          rat_rows[i][j] = Rat(BigInt(arena[i * n_cols + j]), scale);
    }
    game = solve_matrix_game_fictitious(rat_rows, eps, 2'000'000, seed);
  } else if (scale != 0) {
    game = solve_rows_int(arena, reps.size(), n_cols, scale);
  } else {
    game = solve_matrix_game(rat_rows);
  }
  res.value = game.value;
  res.gap = game.gap;
  for (std::size_t i = 0; i < reps.size(); ++i)
    if (game.row_mix[i] != 0) res.searcher_mix.emplace_back(reps[i], game.row_mix[i]);
  for (std::size_t j = 0; j < n_cols; ++j)
    if (game.col_mix[j] != 0) res.hider_mix.emplace_back(res.candidates[j], game.col_mix[j]);
  return res;
}

}  // namespace expsearch
