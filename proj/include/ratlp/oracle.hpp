#pragma once

#include <optional>
#include <span>

#include "ratlp/constraint.hpp"
#include "ratlp/linalg.hpp"
#include "ratlp/linpoly.hpp"

namespace ratlp {

/// Answer of a brute-force feasibility check.  A satisfiable verdict carries a
/// concrete witness assignment over the variables of the input.
struct FeasibilityVerdict {
  bool satisfiable = false;
  std::optional<Assignment> witness;
};

/// Decides satisfiability of a conjunction of linear constraints over the
/// rationals by Fourier-Motzkin elimination, independently of the simplex
/// solver.  Exact but worst-case doubly exponential, so inputs with more than
/// 8 distinct variables are rejected with std::invalid_argument.
FeasibilityVerdict fm_satisfiable(std::span<const ConstraintNF> cs);
FeasibilityVerdict fm_satisfiable(std::span<const Constraint> cs);

/// Result of brute-force optimization of max c·x subject to a·x <= b.
/// Unknown is reported when the feasible region has no vertex (it is not
/// pointed), where vertex enumeration cannot classify the instance.
struct VertexOptimum {
  enum class Kind { Infeasible, Unbounded, Optimal, Unknown };
  Kind kind = Kind::Unknown;
  Rat value;  // meaningful for Optimal
  Vec point;  // meaningful for Optimal
};

/// Optimizes by enumerating all square row subsets of a, solving each exactly,
/// and keeping feasible intersection points; unboundedness is detected through
/// feasible edge directions leaving those vertices.  Exponential in the input,
/// so instances beyond 4 columns or 10 rows are rejected with
/// std::invalid_argument.
VertexOptimum vertex_optimum(const Mat& a, const Vec& b, const Vec& c);

/// Exact solve of a square linear system a·x = b by Gaussian elimination;
/// nullopt when a is singular.
std::optional<Vec> solve_square(const Mat& a, const Vec& b);

}  // namespace ratlp
