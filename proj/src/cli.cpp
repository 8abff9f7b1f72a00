#include "ratlp/cli.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "ratlp/constraint.hpp"
#include "ratlp/games.hpp"
#include "ratlp/optimize.hpp"
#include "ratlp/oracle.hpp"
#include "ratlp/simplex.hpp"

namespace ratlp {

namespace {

std::string position_prefix(std::size_t line, std::size_t column) {
  if (line == 0) return "";
  return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": ";
}

}  // namespace

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error(position_prefix(line, column) + message), line_(line), column_(column) {}

namespace {

Rat parse_token(std::string_view token, std::size_t line, std::size_t column) {
  auto r = Rat::parse(token);
  if (!r) throw ParseError("malformed rational '" + std::string(token) + "'", line, column);
  return *r;
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

// Rationals of one line with their 1-based starting columns.
std::vector<Rat> parse_line(std::string_view text, std::size_t line_no) {
  std::vector<Rat> row;
  std::size_t i = 0;
  while (i < text.size()) {
    if (is_space(text[i])) {
      ++i;
      continue;
    }
    std::size_t begin = i;
    while (i < text.size() && !is_space(text[i])) ++i;
    row.push_back(parse_token(text.substr(begin, i - begin), line_no, begin + 1));
  }
  return row;
}

// Calls fn(line_text, 1-based line number) for each input line.
template <typename Fn>
void for_each_line(std::string_view text, Fn fn) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::size_t end = nl == std::string_view::npos ? text.size() : nl;
    fn(text.substr(pos, end - pos), ++line_no);
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read file", 0, 0);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string render(const Vec& v) {
  std::string s;
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (i) s += ' ';
    s += v[i].to_string();
  }
  return s;
}

std::string render(const std::vector<std::size_t>& indices) {
  std::string s;
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(indices[i]);
  }
  return s;
}

// Human-readable role of constraint `idx` in the combined system built from an
// m-row, n-column instance (see build_system for the layout).
std::string system_role(std::size_t idx, std::size_t m, std::size_t n) {
  if (idx == 0) return "objective coupling";
  if (idx <= m) return "primal row " + std::to_string(idx - 1);
  if (idx <= m + n) return "dual column " + std::to_string(idx - m - 1);
  return "dual nonnegativity y" + std::to_string(idx - m - n - 1);
}

std::size_t distinct_vars(std::span<const Constraint> cs) {
  std::set<std::size_t> vars;
  for (const auto& nf : normalize(cs))
    for (const auto& [v, c] : nf.poly.terms()) vars.insert(v);
  return vars.size();
}

void fail_verification(RunResult& rr, const std::string& why) {
  rr.exit_code = 5;
  rr.err += "verification failed: " + why + "\n";
}

void verify_optimal(RunResult& rr, const Mat& a, const Vec& b, const Vec& c, const Vec& x,
                    const Vec& y) {
  if (!is_certified_optimal(a, b, c, x, y)) {
    fail_verification(rr, "primal/dual certificate does not hold");
    return;
  }
  if (a.cols() <= 4 && a.rows() <= 10) {
    const auto vo = vertex_optimum(a, b, c);
    switch (vo.kind) {
      case VertexOptimum::Kind::Optimal:
        if (vo.value != dot(c, x)) {
          fail_verification(rr, "oracle optimum disagrees");
          return;
        }
        break;
      case VertexOptimum::Kind::Infeasible:
      case VertexOptimum::Kind::Unbounded:
        fail_verification(rr, "oracle says no optimum exists");
        return;
      case VertexOptimum::Kind::Unknown:
        break;  // no vertex to compare; the exact certificate above stands
    }
  }
  rr.out += "verified\n";
}

void verify_unsat(RunResult& rr, const std::vector<Constraint>& system,
                  const std::vector<std::size_t>& core) {
  std::vector<Constraint> sub;
  sub.reserve(core.size());
  for (std::size_t idx : core) sub.push_back(system[idx]);
  if (distinct_vars(sub) > 8) {
    rr.out += "verify skipped (size guard)\n";
    return;
  }
  if (fm_satisfiable(std::span<const Constraint>(sub)).satisfiable) {
    fail_verification(rr, "oracle finds the reported core satisfiable");
    return;
  }
  rr.out += "verified\n";
}

void verify_game(RunResult& rr, const PayoffMatrix& payoff, const GameSolution& sol,
                 const GameSolution& col) {
  Rat total;
  for (const Rat& p : sol.strategy) {
    if (p.sign() < 0) {
      fail_verification(rr, "strategy has a negative weight");
      return;
    }
    total += p;
  }
  if (total != Rat(1)) {
    fail_verification(rr, "strategy weights do not sum to 1");
    return;
  }
  // Row strategy forces at least the value against every pure column...
  for (std::size_t j = 0; j < payoff.cols(); ++j) {
    Rat got;
    for (std::size_t i = 0; i < payoff.rows(); ++i) got += sol.strategy[i] * payoff.at(i, j);
    if (got < sol.value) {
      fail_verification(rr, "row strategy misses the claimed value");
      return;
    }
  }
  // ...and the column player's optimal play caps it at the same value, so the
  // two solutions sandwich the game value exactly.
  if (col.value != -sol.value) {
    fail_verification(rr, "column-player value does not mirror the row value");
    return;
  }
  for (std::size_t i = 0; i < payoff.rows(); ++i) {
    Rat paid;
    for (std::size_t j = 0; j < payoff.cols(); ++j) paid += col.strategy[j] * payoff.at(i, j);
    if (paid > sol.value) {
      fail_verification(rr, "column strategy exceeds the claimed value");
      return;
    }
  }
  rr.out += "verified\n";
}

}  // namespace

Rat parse_rational(std::string_view token) { return parse_token(token, 0, 0); }

Mat parse_matrix(std::string_view text) {
  std::vector<std::vector<Rat>> rows;
  for_each_line(text, [&](std::string_view line, std::size_t line_no) {
    auto row = parse_line(line, line_no);
    if (!row.empty()) rows.push_back(std::move(row));
  });
  if (rows.empty()) throw ParseError("empty matrix", 1, 1);
  std::size_t cols = 0;
  for (const auto& r : rows) cols = std::max(cols, r.size());
  Mat a(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) a.at(i, j) = rows[i][j];
  return a;
}

Vec parse_vector(std::string_view text) {
  std::vector<Rat> entries;
  for_each_line(text, [&](std::string_view line, std::size_t line_no) {
    auto row = parse_line(line, line_no);
    entries.insert(entries.end(), row.begin(), row.end());
  });
  if (entries.empty()) throw ParseError("empty vector", 1, 1);
  Vec v(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) v[i] = entries[i];
  return v;
}

RunResult run_lp(const std::string& matrix_file, const std::string& rhs_file,
                 const std::string& objective_file, const LpFlags& flags) {
  RunResult rr;
  Mat a;
  Vec b, c;
  std::string current = matrix_file;
  try {
    a = parse_matrix(read_file(matrix_file));
    current = rhs_file;
    b = parse_vector(read_file(rhs_file));
    current = objective_file;
    c = parse_vector(read_file(objective_file));
  } catch (const ParseError& e) {
    rr.exit_code = 3;
    rr.err = current + ": " + e.what() + "\n";
    return rr;
  }

  const SolveOptions opts{flags.max_pivots};
  try {
    const auto res = maximize(a, b, c, opts);
    switch (res.kind()) {
      case OptimizeResult::Kind::DimMismatch:
        rr.out = "DIM_MISMATCH\n";
        rr.exit_code = 2;
        return rr;
      case OptimizeResult::Kind::Sat: {
        rr.out = "OPTIMAL\nx = " + render(res.x()) + "\ny = " + render(res.y()) +
                 "\nvalue = " + dot(c, res.x()).to_string() + "\n";
        rr.exit_code = 0;
        if (flags.verify) verify_optimal(rr, a, b, c, res.x(), res.y());
        return rr;
      }
      case OptimizeResult::Kind::Unsat: {
        rr.out = "UNSAT\ncore = " + render(res.core()) + "\n";
        rr.exit_code = 1;
        const auto system = build_system(a, b, c);
        if (flags.explain) {
          for (std::size_t idx : res.core())
            rr.out += "  [" + std::to_string(idx) + "] " + system_role(idx, a.rows(), a.cols()) +
                      ": " + to_string(system[idx]) + "\n";
        }
        if (flags.diagnose) {
          // The reduction cannot tell an infeasible primal from an unbounded
          // one; solving the primal block alone settles it.
          std::vector<Constraint> primal;
          const auto polys = polys_from_matrix(a);
          for (std::size_t i = 0; i < a.rows(); ++i)
            primal.push_back({Affine(polys[i]), Rel::Leq, Affine(b[i])});
          const auto primal_res = solve(primal, opts);
          rr.out += primal_res.is_sat()
                        ? "primal: feasible (problem unbounded or dual infeasible)\n"
                        : "primal: infeasible\n";
        }
        if (flags.verify) verify_unsat(rr, system, res.core());
        return rr;
      }
    }
    rr.err = "internal error: unhandled result kind\n";
    rr.exit_code = 5;
    return rr;
  } catch (const PivotLimitError& e) {
    rr.exit_code = 4;
    rr.err = std::string(e.what()) + "\n";
    return rr;
  }
}

RunResult run_game(const std::string& payoff_file, const GameFlags& flags) {
  RunResult rr;
  PayoffMatrix payoff;
  try {
    payoff = parse_matrix(read_file(payoff_file));
  } catch (const ParseError& e) {
    rr.exit_code = 3;
    rr.err = payoff_file + ": " + e.what() + "\n";
    return rr;
  }

  try {
    const SolveOptions opts{flags.max_pivots};
    const auto sol = solve_game(payoff, opts);
    rr.out = "VALUE = " + sol.value.to_string() + "\nSTRATEGY = " + render(sol.strategy) + "\n";
    rr.exit_code = 0;
    if (flags.verify) verify_game(rr, payoff, sol, solve_game_column(payoff, opts));
    return rr;
  } catch (const PivotLimitError& e) {
    rr.exit_code = 4;
    rr.err = std::string(e.what()) + "\n";
    return rr;
  }
}

}  // namespace ratlp
