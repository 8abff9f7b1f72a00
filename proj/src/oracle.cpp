#include "ratlp/oracle.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ratlp {

namespace {

constexpr std::size_t kMaxFmVars = 8;
constexpr std::size_t kMaxVertexCols = 4;
constexpr std::size_t kMaxVertexRows = 10;

// One inequality poly <= rhs.
struct Row {
  LinPoly poly;
  Rat rhs;
};

// var = poly + constant, used to substitute equalities away.
struct Subst {
  std::size_t var;
  LinPoly poly;
  Rat constant;
};

// Scales each row so its leading coefficient has magnitude 1, keeps only the
// tightest right-hand side per polynomial and drops tautologies.  Returns
// nullopt when some row reduces to 0 <= negative, i.e. the system is
// infeasible.
std::optional<std::vector<Row>> reduce(std::vector<Row> rows) {
  std::map<LinPoly, Rat> best;
  for (auto& r : rows) {
    if (r.poly.is_zero()) {
      if (r.rhs.sign() < 0) return std::nullopt;
      continue;
    }
    const Rat s = Rat(1) / abs(r.poly.terms().begin()->second);
    LinPoly p = s * r.poly;
    const Rat rhs = s * r.rhs;
    auto [it, inserted] = best.try_emplace(std::move(p), rhs);
    if (!inserted && rhs < it->second) it->second = rhs;
  }
  std::vector<Row> out;
  out.reserve(best.size());
  for (auto& [p, rhs] : best) out.push_back({p, rhs});
  return out;
}

// Replaces s.var by s.poly + s.constant in r (a row poly <= rhs or poly = rhs).
void apply_subst(const Subst& s, Row& r) {
  const Rat c = r.poly.coeff(s.var);
  if (c.is_zero()) return;
  r.poly.add_term(s.var, -c);
  r.poly += c * s.poly;
  r.rhs -= c * s.constant;
}

}  // namespace

FeasibilityVerdict fm_satisfiable(std::span<const ConstraintNF> cs) {
  std::set<std::size_t> input_vars;
  for (const auto& c : cs)
    for (const auto& [v, coef] : c.poly.terms()) input_vars.insert(v);
  if (input_vars.size() > kMaxFmVars)
    throw std::invalid_argument("fm_satisfiable: more than 8 distinct variables");

  std::vector<Row> eqs, ineqs;
  for (const auto& c : cs) {
    switch (c.rel) {
      case Rel::Leq: ineqs.push_back({c.poly, c.bound}); break;
      case Rel::Geq: ineqs.push_back({-c.poly, -c.bound}); break;
      case Rel::Eq: eqs.push_back({c.poly, c.bound}); break;
    }
  }

  // Phase 1: substitute each equality away, solving it for its smallest
  // variable.  Earlier substitutions are applied to all later rows, so by the
  // time row k is reached it mentions no already-substituted variable.
  std::vector<Subst> substs;
  for (std::size_t k = 0; k < eqs.size(); ++k) {
    if (eqs[k].poly.is_zero()) {
      if (!eqs[k].rhs.is_zero()) return {false, std::nullopt};
      continue;
    }
    const auto [v, a] = *eqs[k].poly.terms().begin();
    LinPoly rest = eqs[k].poly;
    rest.add_term(v, -a);
    const Rat inv = Rat(1) / a;
    Subst s{v, (-inv) * rest, inv * eqs[k].rhs};
    for (std::size_t j = k + 1; j < eqs.size(); ++j) apply_subst(s, eqs[j]);
    for (auto& r : ineqs) apply_subst(s, r);
    substs.push_back(std::move(s));
  }

  auto reduced = reduce(std::move(ineqs));
  if (!reduced) return {false, std::nullopt};
  std::vector<Row> rows = std::move(*reduced);

  // Phase 2: eliminate the remaining variables one at a time.  Each layer
  // snapshots the system before its variable disappears; the snapshots drive
  // witness extraction afterwards.
  struct Layer {
    std::size_t var;
    std::vector<Row> rows;
  };
  std::vector<Layer> layers;
  for (;;) {
    // Count lower/upper occurrences per remaining variable and eliminate the
    // one generating the fewest combined rows (ties to the smallest index).
    std::map<std::size_t, std::pair<long, long>> counts;
    for (const auto& r : rows)
      for (const auto& [v, coef] : r.poly.terms())
        (coef.sign() > 0 ? counts[v].second : counts[v].first)++;
    if (counts.empty()) break;
    std::size_t var = counts.begin()->first;
    long best_score = std::numeric_limits<long>::max();
    for (const auto& [v, lu] : counts) {
      const long score = lu.first * lu.second;
      if (score < best_score) {
        best_score = score;
        var = v;
      }
    }

    std::vector<Row> lower, upper, next;
    for (auto& r : rows) {
      const int s = r.poly.coeff(var).sign();
      if (s > 0) {
        upper.push_back(r);
      } else if (s < 0) {
        lower.push_back(r);
      } else {
        next.push_back(r);
      }
    }
    layers.push_back({var, rows});
    // Every (lower, upper) pair combines into one row with var cancelled:
    // both scale factors are positive, so <= is preserved.
    for (const auto& l : lower) {
      const Rat al = l.poly.coeff(var);  // < 0
      for (const auto& u : upper) {
        const Rat au = u.poly.coeff(var);  // > 0
        next.push_back({au * l.poly + (-al) * u.poly, au * l.rhs + (-al) * u.rhs});
      }
    }
    auto red = reduce(std::move(next));
    if (!red) return {false, std::nullopt};
    rows = std::move(*red);
  }

  // Satisfiable: rebuild a witness by walking the layers backwards.  In each
  // layer every variable except the layer's own is already assigned, so the
  // rows give a concrete interval, nonempty because elimination was exact.
  Assignment w;
  for (auto it = layers.rbegin(); it != layers.rend(); ++it) {
    std::optional<Rat> lo, hi;
    for (const auto& r : it->rows) {
      const Rat a = r.poly.coeff(it->var);
      if (a.is_zero()) continue;
      LinPoly rest = r.poly;
      rest.add_term(it->var, -a);
      const Rat bound = (r.rhs - rest.eval(w)) / a;
      if (a.sign() > 0) {
        if (!hi || bound < *hi) hi = bound;
      } else {
        if (!lo || bound > *lo) lo = bound;
      }
    }
    w[it->var] = lo ? *lo : (hi ? *hi : Rat());
  }
  // Undo the equality substitutions, most recent first.
  for (auto it = substs.rbegin(); it != substs.rend(); ++it)
    w[it->var] = it->poly.eval(w) + it->constant;
  for (std::size_t v : input_vars) w.try_emplace(v, Rat());
  return {true, std::move(w)};
}

FeasibilityVerdict fm_satisfiable(std::span<const Constraint> cs) {
  const auto nfs = normalize(cs);
  return fm_satisfiable(std::span<const ConstraintNF>(nfs));
}

std::optional<Vec> solve_square(const Mat& a, const Vec& b) {
  if (a.rows() != a.cols() || b.dim() != a.rows())
    throw std::invalid_argument("solve_square: system is not square");
  const std::size_t n = a.rows();
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a.at(i, j);
    m[i][n] = b[i];
  }
  // Gauss-Jordan with first-nonzero pivoting; exact, so no stability concerns.
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && m[p][col].is_zero()) ++p;
    if (p == n) return std::nullopt;
    std::swap(m[col], m[p]);
    const Rat inv = Rat(1) / m[col][col];
    for (std::size_t j = col; j <= n; ++j) m[col][j] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const Rat f = m[r][col];
      if (f.is_zero()) continue;
      for (std::size_t j = col; j <= n; ++j) m[r][j] -= f * m[col][j];
    }
  }
  Vec x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = m[i][n];
  return x;
}

namespace {

// Advances idx to the next size-|idx| subset of {0..m-1} in lexicographic
// order; false when exhausted.
bool next_combination(std::vector<std::size_t>& idx, std::size_t m) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] + (k - i) < m) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

VertexOptimum vertex_optimum(const Mat& a, const Vec& b, const Vec& c) {
  if (a.cols() > kMaxVertexCols || a.rows() > kMaxVertexRows)
    throw std::invalid_argument("vertex_optimum: instance exceeds size guard");
  if (b.dim() != a.rows() || c.dim() != a.cols())
    throw std::invalid_argument("vertex_optimum: dimension mismatch");

  const std::size_t n = a.cols();
  const std::size_t m = a.rows();

  // Feasibility is decided by the independent elimination check, so the
  // Infeasible verdict does not depend on the vertex enumeration below.
  std::vector<ConstraintNF> primal;
  primal.reserve(m);
  for (std::size_t i = 0; i < m; ++i)
    primal.push_back({poly_from_vec(a.row(i)), Rel::Leq, b[i]});
  if (!fm_satisfiable(std::span<const ConstraintNF>(primal)).satisfiable)
    return {VertexOptimum::Kind::Infeasible, {}, {}};

  std::optional<Rat> best;
  Vec best_point;
  if (n <= m) {
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    do {
      Mat basis(n, n);
      Vec rhs(n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) basis.at(i, j) = a.at(idx[i], j);
        rhs[i] = b[idx[i]];
      }
      const auto x = solve_square(basis, rhs);
      if (!x) continue;
      if (!leq_pointwise(mul(a, *x), b)) continue;

      // Feasible vertex.  Relaxing one tight basis row at a time yields the
      // candidate edge directions; a direction that stays feasible forever and
      // improves the objective proves unboundedness.
      for (std::size_t k = 0; k < n; ++k) {
        Vec relax(n);
        relax[k] = Rat(-1);
        const auto d = solve_square(basis, relax);
        if (!d) continue;
        if (leq_pointwise(mul(a, *d), Vec(m)) && dot(c, *d) > Rat())
          return {VertexOptimum::Kind::Unbounded, {}, {}};
      }
      const Rat val = dot(c, *x);
      if (!best || val > *best) {
        best = val;
        best_point = *x;
      }
    } while (next_combination(idx, m));
  }

  if (best) return {VertexOptimum::Kind::Optimal, *best, best_point};
  // Feasible but without any vertex (the region is not pointed): this
  // enumeration cannot distinguish bounded from unbounded.
  return {VertexOptimum::Kind::Unknown, {}, {}};
}

}  // namespace ratlp
