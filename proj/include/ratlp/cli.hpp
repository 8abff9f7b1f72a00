#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ratlp/linalg.hpp"
#include "ratlp/rational.hpp"

namespace ratlp {

/// Input error with 1-based position information (0 when position is unknown,
/// e.g. unreadable files or bare-token parses).
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

/// "p", "-p", "p/q" or "-p/q" with decimal digits and q > 0; anything else
/// (signs on q, whitespace, zero denominator) throws ParseError.
Rat parse_rational(std::string_view token);

/// One matrix row per nonempty line, whitespace-separated rationals; shorter
/// rows are zero-padded to the longest row.  Input without any row throws.
Mat parse_matrix(std::string_view text);

/// All whitespace-separated rationals in reading order; empty input throws.
Vec parse_vector(std::string_view text);

/// What a CLI run would print and return, separated from the process plumbing
/// so it can be tested directly.
struct RunResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

struct LpFlags {
  bool verify = false;
  bool diagnose = false;
  bool explain = false;
  std::optional<std::uint64_t> max_pivots;
};

struct GameFlags {
  bool verify = false;
  std::optional<std::uint64_t> max_pivots;
};

/// Solves max c·x s.t. A·x <= b from whitespace-format files and renders the
/// result exactly.  Exit codes: 0 optimal, 1 unsat, 2 dimension mismatch,
/// 3 parse/input error, 4 pivot limit exceeded, 5 verification failure.
RunResult run_lp(const std::string& matrix_file, const std::string& rhs_file,
                 const std::string& objective_file, const LpFlags& flags);

/// Solves a zero-sum matrix game from a payoff file.  Exit codes as run_lp
/// (games themselves always have a value, so 1 and 2 do not occur).
RunResult run_game(const std::string& payoff_file, const GameFlags& flags);

}  // namespace ratlp
