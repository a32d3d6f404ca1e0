#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "decomposition.hpp"
#include "search.hpp"

namespace expsearch {

// Undominated hider candidates: leaf nodes of the bridge tree plus, on every
// block arc, the midpoints of ceil(len/h) equal pieces (spacing <= h). With
// no_dominance set, all nodes and the same grid on bridge arcs are added.
std::vector<Point> hider_candidates(const RootedNetwork& net, const Decomposition& dec,
                                    const Rat& h, bool no_dominance = false);

// All valid whole-arc expanding searches, generated by depth-first extension
// in canonical order. Throws CapExceeded past the cap.
std::vector<PureSearch> enumerate_searches(const RootedNetwork& net, std::size_t cap);

// Streaming variant; the callback sees each complete search once.
void for_each_search(const RootedNetwork& net, std::size_t cap,
                     const std::function<void(const PureSearch&)>& fn);

struct GameSolution {
  Rat value;
  std::vector<Rat> row_mix;  // searcher (minimizer), one entry per row
  std::vector<Rat> col_mix;  // hider (maximizer), one entry per column
  Rat gap;                   // certified guarantee gap; 0 in exact mode
  std::size_t iterations = 0;
};

// Exact value and certificate mixes of a finite zero-sum game (rows minimize,
// columns maximize) by simplex over rationals with row generation, so large
// row counts with few columns stay cheap.
GameSolution solve_matrix_game(const std::vector<std::vector<Rat>>& payoff);

// Fictitious-play fallback for matrices too large for the exact route: stops
// once the certified gap drops below eps. Ties are broken by a seeded RNG.
GameSolution solve_matrix_game_fictitious(const std::vector<std::vector<Rat>>& payoff, double eps,
                                          std::uint64_t max_iters, std::uint64_t seed);

struct OracleResult {
  Rat value;
  Rat gap;
  Rat h;
  double eps;
  bool exact = true;
  std::size_t searches_enumerated = 0;
  std::size_t distinct_rows = 0;
  std::vector<Point> candidates;
  std::vector<std::pair<PureSearch, Rat>> searcher_mix;  // support only
  std::vector<std::pair<Point, Rat>> hider_mix;          // support only
};

// Desk-scale exact solve of the whole-arc expanding search game against the
// candidate hider grid. Identical payoff rows are merged before solving.
OracleResult oracle_value(const RootedNetwork& net, const Rat& h, double eps, std::size_t cap,
                          bool no_dominance = false, bool exact = true, std::uint64_t seed = 0);

// Payoff matrix for external inspection (row per search, column per candidate).
struct OracleMatrix {
  std::vector<Point> candidates;
  std::vector<PureSearch> searches;
  std::vector<std::vector<Rat>> payoff;
};
OracleMatrix oracle_matrix(const RootedNetwork& net, const Rat& h, std::size_t cap,
                           bool no_dominance = false);

}  // namespace expsearch
