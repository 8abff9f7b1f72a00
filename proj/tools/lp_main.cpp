#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "ratlp/cli.hpp"

namespace {

// Strict unsigned decimal parse for the LP_MAX_PIVOTS environment variable.
bool parse_pivot_cap(const std::string& text, std::uint64_t& out) {
  if (text.empty()) return false;
  std::uint64_t v = 0;
  for (char c : text) {
    if (c < '0' || c > '9') return false;
    if (v > (UINT64_MAX - (c - '0')) / 10) return false;
    v = v * 10 + (c - '0');
  }
  out = v;
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact rational linear-programming and matrix-game solver"};
  app.require_subcommand(1);

  std::string matrix_file, rhs_file, objective_file, payoff_file;
  ratlp::LpFlags lp_flags;
  ratlp::GameFlags game_flags;

  auto* solve_cmd = app.add_subcommand("solve", "Maximize c.x subject to A.x <= b");
  solve_cmd->add_option("--matrix", matrix_file, "File with matrix A, one row per line")
      ->required();
  solve_cmd->add_option("--rhs", rhs_file, "File with right-hand side b")->required();
  solve_cmd->add_option("--objective", objective_file, "File with objective c")->required();
  solve_cmd->add_flag("--verify", lp_flags.verify,
                      "Cross-check the result against the brute-force oracle");
  solve_cmd->add_flag("--diagnose", lp_flags.diagnose,
                      "On UNSAT, additionally report whether the primal block alone is feasible");
  solve_cmd->add_flag("--explain", lp_flags.explain,
                      "On UNSAT, print each core constraint in readable form");

  auto* game_cmd = app.add_subcommand("game", "Solve a two-player zero-sum matrix game");
  game_cmd->add_option("--payoff", payoff_file, "File with the payoff matrix")->required();
  game_cmd->add_flag("--verify", game_flags.verify,
                     "Cross-check the equilibrium with exact certificates");

  CLI11_PARSE(app, argc, argv);

  if (const char* cap = std::getenv("LP_MAX_PIVOTS")) {
    std::uint64_t v = 0;
    if (!parse_pivot_cap(cap, v)) {
      std::cerr << "LP_MAX_PIVOTS: malformed value '" << cap << "'\n";
      return 3;
    }
    lp_flags.max_pivots = v;
    game_flags.max_pivots = v;
  }

  ratlp::RunResult rr;
  if (solve_cmd->parsed()) {
    rr = ratlp::run_lp(matrix_file, rhs_file, objective_file, lp_flags);
  } else {
    rr = ratlp::run_game(payoff_file, game_flags);
  }
  std::cout << rr.out;
  std::cerr << rr.err;
  return rr.exit_code;
}
