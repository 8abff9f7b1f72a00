#include "ratlp/optimize.hpp"

#include <stdexcept>

namespace ratlp {

OptimizeResult OptimizeResult::dim_mismatch() { return OptimizeResult{}; }

OptimizeResult OptimizeResult::unsat(std::vector<std::size_t> core) {
  OptimizeResult r;
  r.kind_ = Kind::Unsat;
  r.core_ = std::move(core);
  return r;
}

OptimizeResult OptimizeResult::sat(Vec x, Vec y) {
  OptimizeResult r;
  r.kind_ = Kind::Sat;
  r.x_ = std::move(x);
  r.y_ = std::move(y);
  return r;
}

const Vec& OptimizeResult::x() const {
  if (kind_ != Kind::Sat) throw std::logic_error("x() on non-Sat result");
  return x_;
}

const Vec& OptimizeResult::y() const {
  if (kind_ != Kind::Sat) throw std::logic_error("y() on non-Sat result");
  return y_;
}

const std::vector<std::size_t>& OptimizeResult::core() const {
  if (kind_ != Kind::Unsat) throw std::logic_error("core() on non-Unsat result");
  return core_;
}

std::pair<Vec, Vec> split_assignment(std::size_t n, std::size_t m, const Assignment& a) {
  Vec x(n), y(m);
  for (std::size_t i = 0; i < n; ++i) x[i] = lookup(a, i);
  for (std::size_t i = 0; i < m; ++i) y[i] = lookup(a, n + i);
  return {std::move(x), std::move(y)};
}

OptimizeResult solve_primal_dual(const Mat& a, const Vec& b, const Vec& c,
                                 const SolveOptions& opts, SolveStats* stats) {
  const auto system = build_system(a, b, c);
  auto res = solve(system, opts, stats);
  if (!res.is_sat()) return OptimizeResult::unsat(res.core());
  auto [x, y] = split_assignment(c.dim(), b.dim(), res.assignment());
  return OptimizeResult::sat(std::move(x), std::move(y));
}

OptimizeResult maximize(const Mat& a, const Vec& b, const Vec& c) {
  return maximize(a, b, c, SolveOptions{}, nullptr);
}

OptimizeResult maximize(const Mat& a, const Vec& b, const Vec& c, const SolveOptions& opts,
                        SolveStats* stats) {
  if (b.dim() != a.rows() || c.dim() != a.cols()) return OptimizeResult::dim_mismatch();
  return solve_primal_dual(a, b, c, opts, stats);
}

bool is_primal_feasible(const Mat& a, const Vec& b, const Vec& x) {
  return leq_pointwise(mul(a, x), b);
}

bool is_dual_feasible(const Mat& a, const Vec& c, const Vec& y) {
  if (c.dim() != a.cols()) throw std::invalid_argument("is_dual_feasible: dimension mismatch");
  for (const Rat& yi : y)
    if (yi.sign() < 0) return false;
  return mul(y, a) == c;
}

Rat duality_gap(const Vec& b, const Vec& c, const Vec& x, const Vec& y) {
  return dot(y, b) - dot(c, x);
}

bool is_certified_optimal(const Mat& a, const Vec& b, const Vec& c, const Vec& x, const Vec& y) {
  return is_primal_feasible(a, b, x) && is_dual_feasible(a, c, y) &&
         duality_gap(b, c, x, y).is_zero();
}

}  // namespace ratlp
