#pragma once

#include "ratlp/linalg.hpp"
#include "ratlp/optimize.hpp"

namespace ratlp {

/// Payoff matrix of a two-player zero-sum game: entry (i, j) is what the
/// column player pays the row player when row strategy i meets column
/// strategy j.
using PayoffMatrix = Mat;

/// Game value plus an optimal mixed strategy achieving it.
struct GameSolution {
  Rat value;
  Vec strategy;
};

/// Encodes the row player's maximin problem as an LP over (v, p1..pr):
/// maximize v subject to, for every opponent column j,
/// v - sum_i payoff(i,j)*p_i <= 0, together with sum_i p_i = 1 and p >= 0.
/// Throws std::invalid_argument for an empty matrix.
LpProblem game_to_lp(const PayoffMatrix& payoff);

/// Optimal mixed strategy and game value for the row player.  The encoding is
/// always feasible and bounded, so an unexpected solver verdict is an internal
/// error and throws std::logic_error.
GameSolution solve_game(const PayoffMatrix& payoff, const SolveOptions& opts = {});

/// The column player's view: their strategy in payoff matrix m is the row
/// player's strategy in -transpose(m), and the value they can force is the
/// negation of the row player's.
GameSolution solve_game_column(const PayoffMatrix& payoff, const SolveOptions& opts = {});

}  // namespace ratlp
