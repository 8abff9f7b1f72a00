#include <random>

#include "doctest.h"
#include "ratlp/games.hpp"
#include "ratlp/oracle.hpp"
#include "support/gen.hpp"

using namespace ratlp;

namespace {

// Rock-paper-scissors: symmetric, value 0, uniform strategy.
PayoffMatrix rps() { return Mat{{0, -1, 1}, {1, 0, -1}, {-1, 1, 0}}; }

// Matching pennies: value 0, uniform over two moves.
PayoffMatrix pennies() { return Mat{{1, -1}, {-1, 1}}; }

}  // namespace

TEST_CASE("game_to_lp_layout") {
  const LpProblem lp = game_to_lp(rps());
  // Variables: value + three weights; rows: 3 payoff columns + the two
  // simplex-sum halves + 3 nonnegativity rows.
  CHECK(lp.a.rows() == 8);
  CHECK(lp.a.cols() == 4);
  CHECK(lp.b.dim() == 8);
  CHECK(lp.c.dim() == 4);
  CHECK(lp.c == Vec{1, 0, 0, 0});

  // Column 0 of the payoff matrix: v - 0*p0 - 1*p1 + 1*p2 <= 0.
  CHECK(lp.a.row(0) == Vec{1, 0, -1, 1});
  CHECK(lp.a.row(1) == Vec{1, 1, 0, -1});
  CHECK(lp.a.row(2) == Vec{1, -1, 1, 0});
  CHECK(lp.b[0] == Rat(0));
  // Weights sum to exactly 1, encoded as a <= pair.
  CHECK(lp.a.row(3) == Vec{0, 1, 1, 1});
  CHECK(lp.b[3] == Rat(1));
  CHECK(lp.a.row(4) == Vec{0, -1, -1, -1});
  CHECK(lp.b[4] == Rat(-1));
  // Nonnegative weights.
  CHECK(lp.a.row(5) == Vec{0, -1, 0, 0});
  CHECK(lp.a.row(6) == Vec{0, 0, -1, 0});
  CHECK(lp.a.row(7) == Vec{0, 0, 0, -1});
  CHECK(lp.b[7] == Rat(0));

  CHECK_THROWS_AS(game_to_lp(Mat()), std::invalid_argument);
  CHECK_THROWS_AS(game_to_lp(Mat(0, 3)), std::invalid_argument);
  CHECK_THROWS_AS(game_to_lp(Mat(2, 0)), std::invalid_argument);
}

TEST_CASE("game_to_lp_single_entry") {
  const LpProblem lp = game_to_lp(Mat{{5}});
  CHECK(lp.a == Mat{{1, -5}, {0, 1}, {0, -1}, {0, -1}});
  CHECK(lp.b == Vec{0, 1, -1, 0});
  CHECK(lp.c == Vec{1, 0});
}

TEST_CASE("solve_game_rock_paper_scissors") {
  const GameSolution sol = solve_game(rps());
  CHECK(sol.value == Rat(0));
  CHECK(sol.strategy == Vec{Rat(1, 3), Rat(1, 3), Rat(1, 3)});
}

TEST_CASE("solve_game_degenerate_and_small") {
  const GameSolution one = solve_game(Mat{{5}});
  CHECK(one.value == Rat(5));
  CHECK(one.strategy == Vec{1});

  const GameSolution mp = solve_game(pennies());
  CHECK(mp.value == Rat(0));
  CHECK(mp.strategy == Vec{Rat(1, 2), Rat(1, 2)});

  // A dominant row: always play it.
  const GameSolution dom = solve_game(Mat{{3, 2}, {0, 1}});
  CHECK(dom.value == Rat(2));
  CHECK(dom.strategy == Vec{1, 0});
}

TEST_CASE("solve_game_column_player") {
  const GameSolution col = solve_game_column(pennies());
  CHECK(col.value == Rat(0));
  CHECK(col.strategy == Vec{Rat(1, 2), Rat(1, 2)});

  const GameSolution rps_col = solve_game_column(rps());
  CHECK(rps_col.value == Rat(0));
  CHECK(rps_col.strategy == Vec{Rat(1, 3), Rat(1, 3), Rat(1, 3)});

  // Row player of [[5]] wins 5; the column player can only concede it.
  const GameSolution col1 = solve_game_column(Mat{{5}});
  CHECK(col1.value == Rat(-5));
}

TEST_CASE("game_value_matches_vertex_oracle_on_the_encoded_lp") {
  const LpProblem lp = game_to_lp(pennies());
  const auto vo = vertex_optimum(lp.a, lp.b, lp.c);
  REQUIRE(vo.kind == VertexOptimum::Kind::Optimal);
  CHECK(vo.value == solve_game(pennies()).value);
}

TEST_CASE("game_invariants_random") {
  std::mt19937_64 rng(71);
  std::uniform_int_distribution<std::size_t> dim(1, 3);
  for (int iter = 0; iter < 60; ++iter) {
    const std::size_t r = dim(rng), k = dim(rng);
    const PayoffMatrix payoff = testgen::random_mat(rng, r, k);
    const GameSolution sol = solve_game(payoff);

    // The strategy is a probability distribution.
    Rat total;
    for (const Rat& p : sol.strategy) {
      CHECK(p.sign() >= 0);
      total += p;
    }
    CHECK(total == Rat(1));

    // Security level: the mixed strategy earns at least the value against
    // every pure column response.
    for (std::size_t j = 0; j < k; ++j) {
      Rat earned;
      for (std::size_t i = 0; i < r; ++i) earned += sol.strategy[i] * payoff.at(i, j);
      CHECK(earned >= sol.value);
    }

    // The column player's guarantee meets it exactly (minimax = maximin).
    const GameSolution col = solve_game_column(payoff);
    CHECK(col.value == -sol.value);
    for (std::size_t i = 0; i < r; ++i) {
      Rat paid;
      for (std::size_t j = 0; j < k; ++j) paid += col.strategy[j] * payoff.at(i, j);
      CHECK(paid <= sol.value);
    }

    // Shifting every payoff shifts the value and keeps some optimal strategy;
    // the solver is deterministic, so the strategy is reproducible.
    const Rat shift = testgen::random_rat(rng);
    Mat shifted = payoff;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < k; ++j) shifted.at(i, j) += shift;
    CHECK(solve_game(shifted).value == sol.value + shift);
  }
}

TEST_CASE("skew_symmetric_games_are_fair_random") {
  std::mt19937_64 rng(72);
  std::uniform_int_distribution<std::size_t> dim(1, 3);
  for (int iter = 0; iter < 40; ++iter) {
    const std::size_t n = dim(rng);
    const Mat raw = testgen::random_mat(rng, n, n);
    Mat skew(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) skew.at(i, j) = raw.at(i, j) - raw.at(j, i);
    CHECK(solve_game(skew).value == Rat(0));
  }
}
