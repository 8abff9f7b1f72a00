#include "ratlp/games.hpp"

#include <stdexcept>

namespace ratlp {

LpProblem game_to_lp(const PayoffMatrix& payoff) {
  if (payoff.rows() == 0 || payoff.cols() == 0)
    throw std::invalid_argument("game_to_lp: empty payoff matrix");
  const std::size_t r = payoff.rows();
  const std::size_t k = payoff.cols();

  // Variables: 0 is the guaranteed value v, 1..r are the strategy weights.
  // Rows: k payoff rows, then sum = 1 as a <= pair, then r nonnegativity rows.
  const std::size_t n = 1 + r;
  const std::size_t m = k + 2 + r;
  Mat a(m, n);
  Vec b(m);
  Vec c(n);
  c[0] = 1;
  for (std::size_t j = 0; j < k; ++j) {
    a.at(j, 0) = 1;
    for (std::size_t i = 0; i < r; ++i) a.at(j, 1 + i) = -payoff.at(i, j);
  }
  for (std::size_t i = 0; i < r; ++i) {
    a.at(k, 1 + i) = 1;
    a.at(k + 1, 1 + i) = -1;
    a.at(k + 2 + i, 1 + i) = -1;
  }
  b[k] = 1;
  b[k + 1] = -1;
  return {std::move(a), std::move(b), std::move(c)};
}

GameSolution solve_game(const PayoffMatrix& payoff, const SolveOptions& opts) {
  const auto lp = game_to_lp(payoff);
  const auto res = maximize(lp.a, lp.b, lp.c, opts);
  // The strategy simplex is nonempty and the value variable is squeezed
  // between the finite payoffs, so the LP always has an optimum.
  if (!res.is_sat()) throw std::logic_error("solve_game: game encoding was not solvable");
  GameSolution sol;
  sol.value = res.x()[0];
  sol.strategy = Vec(payoff.rows());
  for (std::size_t i = 0; i < payoff.rows(); ++i) sol.strategy[i] = res.x()[1 + i];
  return sol;
}

GameSolution solve_game_column(const PayoffMatrix& payoff, const SolveOptions& opts) {
  Mat flipped = transpose(payoff);
  for (std::size_t i = 0; i < flipped.rows(); ++i)
    for (std::size_t j = 0; j < flipped.cols(); ++j) flipped.at(i, j) = -flipped.at(i, j);
  return solve_game(flipped, opts);
}

}  // namespace ratlp
