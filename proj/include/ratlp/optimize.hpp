#pragma once

#include <utility>
#include <vector>

#include "ratlp/constraint.hpp"
#include "ratlp/linalg.hpp"
#include "ratlp/simplex.hpp"

namespace ratlp {

/// max c·x subject to a·x <= b, with x unrestricted in sign.
struct LpProblem {
  Mat a;
  Vec b;
  Vec c;
};

/// Outcome of maximize: either the input dimensions disagree, or the combined
/// optimality system is unsatisfiable (primal infeasible or unbounded), or an
/// optimal primal point x together with an optimal dual certificate y.
class OptimizeResult {
public:
  enum class Kind { DimMismatch, Unsat, Sat };

  static OptimizeResult dim_mismatch();
  static OptimizeResult unsat(std::vector<std::size_t> core);
  static OptimizeResult sat(Vec x, Vec y);

  Kind kind() const { return kind_; }
  bool is_sat() const { return kind_ == Kind::Sat; }

  /// Optimal primal point (Sat only).
  const Vec& x() const;
  /// Optimal dual certificate (Sat only).
  const Vec& y() const;
  /// Indices into the combined system built by build_system (Unsat only).
  const std::vector<std::size_t>& core() const;

private:
  Kind kind_ = Kind::DimMismatch;
  Vec x_, y_;
  std::vector<std::size_t> core_;
};

/// Splits a satisfying assignment of the combined system back into the primal
/// part x = vars 0..n-1 and the dual part y = vars n..n+m-1.
std::pair<Vec, Vec> split_assignment(std::size_t n, std::size_t m, const Assignment& a);

/// Core of the reduction: builds the combined optimality system and hands it
/// to the satisfiability solver.  Dimensions must already agree.
OptimizeResult solve_primal_dual(const Mat& a, const Vec& b, const Vec& c,
                                 const SolveOptions& opts = {}, SolveStats* stats = nullptr);

/// Solves max c·x s.t. a·x <= b exactly.  Any satisfying assignment of the
/// combined system is an optimal primal/dual pair, so no objective search is
/// needed; Unsat means the LP has no optimum (infeasible or unbounded).
OptimizeResult maximize(const Mat& a, const Vec& b, const Vec& c);
OptimizeResult maximize(const Mat& a, const Vec& b, const Vec& c, const SolveOptions& opts,
                        SolveStats* stats = nullptr);

bool is_primal_feasible(const Mat& a, const Vec& b, const Vec& x);

/// y >= 0 and transpose(a)·y = c.
bool is_dual_feasible(const Mat& a, const Vec& c, const Vec& y);

/// b·y - c·x; nonnegative for any feasible pair, zero exactly at optimality.
Rat duality_gap(const Vec& b, const Vec& c, const Vec& x, const Vec& y);

/// Checks the full optimality certificate: both points feasible and the
/// duality gap zero.
bool is_certified_optimal(const Mat& a, const Vec& b, const Vec& c, const Vec& x, const Vec& y);

}  // namespace ratlp
