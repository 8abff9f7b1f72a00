#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <variant>
#include <vector>

#include "ratlp/constraint.hpp"
#include "ratlp/linpoly.hpp"

namespace ratlp {

/// Thrown when a pivot budget is exhausted before the solver finishes.
class PivotLimitError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct SolveOptions {
  /// Abort with PivotLimitError after this many pivots (unlimited if unset).
  std::optional<std::uint64_t> max_pivots;
};

struct SolveStats {
  std::uint64_t pivots = 0;
};

/// Simplex tableau over exact rationals, in the bounds form used by
/// satisfiability solvers: every variable carries optional lower/upper bounds,
/// basic variables are defined by linear rows over the nonbasic ones, and a
/// candidate assignment is maintained for the nonbasic variables.
///
/// Invariants: rows mention only nonbasic variables, and every nonbasic
/// variable's value lies within its bounds (basic values are derived and may
/// temporarily violate theirs; pivoting repairs that).
class Tableau {
public:
  /// A bound remembers which input constraint produced it, so conflicts can
  /// name the responsible constraints.
  struct Bound {
    Rat value;
    std::size_t origin;
  };

  /// A basic variable that cannot be repaired, with the origins of the bounds
  /// that together are unsatisfiable.
  struct Conflict {
    std::size_t basic;
    std::vector<std::size_t> core;
  };

  /// Defines basic = row, where row may mention only nonbasic variables.
  void add_row(std::size_t basic, LinPoly row);

  void set_lower(std::size_t var, Rat value, std::size_t origin);
  void set_upper(std::size_t var, Rat value, std::size_t origin);

  /// Sets the candidate value of a nonbasic variable.
  void set_value(std::size_t var, Rat value);

  bool is_basic(std::size_t var) const { return rows_.find(var) != rows_.end(); }
  const LinPoly& row(std::size_t basic) const;
  std::optional<Bound> lower(std::size_t var) const;
  std::optional<Bound> upper(std::size_t var) const;

  /// Candidate value: stored for nonbasic variables, derived through the row
  /// for basic ones.
  Rat value(std::size_t var) const;

  /// Candidate values of every variable the tableau has seen.
  Assignment assignment() const;

  /// Swaps a basic and a nonbasic variable by solving the basic variable's row
  /// for the nonbasic one and substituting everywhere.  The candidate point is
  /// unchanged; only the representation moves.  Throws std::invalid_argument
  /// if basic is not basic or its row's coefficient on nonbasic is zero.
  void pivot(std::size_t basic, std::size_t nonbasic);

  /// Repairs bound violations by Bland-rule pivoting until either every
  /// variable is within bounds (returns the assignment) or some row witnesses
  /// unsatisfiability (returns the conflict with its bound origins).
  std::variant<Assignment, Conflict> check_feasibility(const SolveOptions& opts = {},
                                                       SolveStats* stats = nullptr);

private:
  Rat nonbasic_value(std::size_t var) const;
  bool can_increase(std::size_t var) const;
  bool can_decrease(std::size_t var) const;

  std::map<std::size_t, LinPoly> rows_;   // basic var -> defining row
  std::map<std::size_t, Rat> values_;     // nonbasic var -> candidate value
  std::map<std::size_t, Bound> lower_, upper_;
  std::set<std::size_t> vars_;            // every variable ever mentioned
};

/// Solver outcome: either a satisfying assignment over the variables of the
/// input, or an irreducible-in-practice unsatisfiable core of input indices.
class SimplexResult {
public:
  static SimplexResult sat(Assignment a);
  static SimplexResult unsat(std::vector<std::size_t> core);

  bool is_sat() const { return sat_; }
  const Assignment& assignment() const;
  const std::vector<std::size_t>& core() const;

private:
  bool sat_ = false;
  Assignment assignment_;
  std::vector<std::size_t> core_;
};

/// Decides a conjunction of linear constraints over the rationals.  Sat
/// results carry an exact satisfying assignment; Unsat results carry a sorted
/// list of input constraint indices that are already unsatisfiable together.
SimplexResult solve(std::span<const Constraint> cs);
SimplexResult solve(std::span<const Constraint> cs, const SolveOptions& opts,
                    SolveStats* stats = nullptr);

}  // namespace ratlp
