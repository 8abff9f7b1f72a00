#include "ratlp/simplex.hpp"

#include <algorithm>
#include <utility>

namespace ratlp {

void Tableau::add_row(std::size_t basic, LinPoly row) {
  if (rows_.count(basic)) throw std::invalid_argument("add_row: variable is already basic");
  for (const auto& [v, c] : row.terms()) {
    if (rows_.count(v)) throw std::invalid_argument("add_row: row mentions a basic variable");
    vars_.insert(v);
  }
  vars_.insert(basic);
  values_.erase(basic);
  rows_[basic] = std::move(row);
}

void Tableau::set_lower(std::size_t var, Rat value, std::size_t origin) {
  vars_.insert(var);
  lower_[var] = Bound{std::move(value), origin};
}

void Tableau::set_upper(std::size_t var, Rat value, std::size_t origin) {
  vars_.insert(var);
  upper_[var] = Bound{std::move(value), origin};
}

void Tableau::set_value(std::size_t var, Rat value) {
  if (is_basic(var)) throw std::invalid_argument("set_value: variable is basic");
  vars_.insert(var);
  values_[var] = std::move(value);
}

const LinPoly& Tableau::row(std::size_t basic) const {
  auto it = rows_.find(basic);
  if (it == rows_.end()) throw std::invalid_argument("row: variable is not basic");
  return it->second;
}

std::optional<Tableau::Bound> Tableau::lower(std::size_t var) const {
  auto it = lower_.find(var);
  return it == lower_.end() ? std::nullopt : std::optional<Bound>(it->second);
}

std::optional<Tableau::Bound> Tableau::upper(std::size_t var) const {
  auto it = upper_.find(var);
  return it == upper_.end() ? std::nullopt : std::optional<Bound>(it->second);
}

Rat Tableau::nonbasic_value(std::size_t var) const {
  auto it = values_.find(var);
  return it == values_.end() ? Rat() : it->second;
}

Rat Tableau::value(std::size_t var) const {
  auto it = rows_.find(var);
  if (it == rows_.end()) return nonbasic_value(var);
  Rat s;
  for (const auto& [v, c] : it->second.terms()) s += c * nonbasic_value(v);
  return s;
}

Assignment Tableau::assignment() const {
  Assignment a;
  for (std::size_t v : vars_) a[v] = value(v);
  return a;
}

void Tableau::pivot(std::size_t basic, std::size_t nonbasic) {
  auto it = rows_.find(basic);
  if (it == rows_.end()) throw std::invalid_argument("pivot: first variable is not basic");
  const Rat a = it->second.coeff(nonbasic);
  if (a.is_zero()) throw std::invalid_argument("pivot: zero coefficient");

  // The candidate point must not move: remember the derived value of the
  // leaving variable before the rows are rewritten.
  const Rat leaving_value = value(basic);

  // basic = a*nonbasic + rest  ==>  nonbasic = (basic - rest) / a
  LinPoly rest = it->second;
  rest.add_term(nonbasic, -a);
  const Rat inv = Rat(1) / a;
  LinPoly solved = (-inv) * rest;
  solved.add_term(basic, inv);
  rows_.erase(it);

  for (auto& [bv, r] : rows_) {
    const Rat c = r.coeff(nonbasic);
    if (c.is_zero()) continue;
    r.add_term(nonbasic, -c);
    r += c * solved;
  }
  rows_[nonbasic] = std::move(solved);
  values_.erase(nonbasic);
  values_[basic] = leaving_value;
}

bool Tableau::can_increase(std::size_t var) const {
  auto it = upper_.find(var);
  return it == upper_.end() || nonbasic_value(var) < it->second.value;
}

bool Tableau::can_decrease(std::size_t var) const {
  auto it = lower_.find(var);
  return it == lower_.end() || nonbasic_value(var) > it->second.value;
}

std::variant<Assignment, Tableau::Conflict> Tableau::check_feasibility(const SolveOptions& opts,
                                                                       SolveStats* stats) {
  std::uint64_t pivots = 0;
  const auto record = [&] {
    if (stats) stats->pivots = pivots;
  };

  for (;;) {
    // Bland's rule, part one: the smallest basic variable violating a bound.
    std::size_t leaving = 0;
    bool need_increase = false;
    const Bound* violated = nullptr;
    for (const auto& [v, r] : rows_) {
      const Rat val = value(v);
      if (auto lo = lower_.find(v); lo != lower_.end() && val < lo->second.value) {
        leaving = v;
        need_increase = true;
        violated = &lo->second;
        break;
      }
      if (auto up = upper_.find(v); up != upper_.end() && val > up->second.value) {
        leaving = v;
        need_increase = false;
        violated = &up->second;
        break;
      }
    }
    if (!violated) {
      record();
      return assignment();
    }

    // Part two: the smallest nonbasic variable whose move helps.  Increasing
    // the row value needs a positive-coefficient variable with slack above or
    // a negative-coefficient one with slack below; decreasing is symmetric.
    const LinPoly& r = rows_.at(leaving);
    std::optional<std::size_t> entering;
    for (const auto& [v, c] : r.terms()) {
      const bool towards_upper = need_increase == (c.sign() > 0);
      if (towards_upper ? can_increase(v) : can_decrease(v)) {
        entering = v;
        break;
      }
    }

    if (!entering) {
      // Every nonbasic variable in the row is pinned at the bound opposing the
      // repair, so the row's extreme value still violates the bound: those
      // bounds plus the violated one form an unsatisfiable core.
      Conflict conflict;
      conflict.basic = leaving;
      conflict.core.push_back(violated->origin);
      for (const auto& [v, c] : r.terms()) {
        const bool towards_upper = need_increase == (c.sign() > 0);
        conflict.core.push_back(towards_upper ? upper_.at(v).origin : lower_.at(v).origin);
      }
      std::sort(conflict.core.begin(), conflict.core.end());
      conflict.core.erase(std::unique(conflict.core.begin(), conflict.core.end()),
                          conflict.core.end());
      record();
      return conflict;
    }

    if (opts.max_pivots && pivots >= *opts.max_pivots) {
      record();
      throw PivotLimitError("pivot limit exceeded");
    }
    ++pivots;
    const Rat target = violated->value;
    pivot(leaving, *entering);
    // The leaving variable is nonbasic now; park it exactly on the bound it
    // violated.  The entering variable's value is derived through its new row.
    values_[leaving] = target;
  }
}

SimplexResult SimplexResult::sat(Assignment a) {
  SimplexResult r;
  r.sat_ = true;
  r.assignment_ = std::move(a);
  return r;
}

SimplexResult SimplexResult::unsat(std::vector<std::size_t> core) {
  SimplexResult r;
  r.sat_ = false;
  r.core_ = std::move(core);
  return r;
}

const Assignment& SimplexResult::assignment() const {
  if (!sat_) throw std::logic_error("assignment() on unsat result");
  return assignment_;
}

const std::vector<std::size_t>& SimplexResult::core() const {
  if (sat_) throw std::logic_error("core() on sat result");
  return core_;
}

SimplexResult solve(std::span<const Constraint> cs) { return solve(cs, SolveOptions{}, nullptr); }

SimplexResult solve(std::span<const Constraint> cs, const SolveOptions& opts, SolveStats* stats) {
  const auto nfs = normalize(cs);

  std::set<std::size_t> original_vars;
  for (const auto& nf : nfs)
    for (const auto& [v, c] : nf.poly.terms()) original_vars.insert(v);

  // Constraints whose variables cancelled out are ground truths; a violated
  // one is a singleton core.
  for (std::size_t i = 0; i < nfs.size(); ++i) {
    if (nfs[i].poly.is_zero() && !rel_holds(Rat(), nfs[i].rel, nfs[i].bound))
      return SimplexResult::unsat({i});
  }

  // One slack variable per distinct left-hand polynomial; slack indices start
  // above every input variable.  Relations become bounds on the slack, merged
  // so only the tightest bound of each kind survives (first origin wins ties).
  const std::size_t slack_base = original_vars.empty() ? 0 : *original_vars.rbegin() + 1;
  std::map<LinPoly, std::size_t> slack_of;
  std::vector<const LinPoly*> slack_poly;
  struct Bnd {
    std::optional<Tableau::Bound> lo, up;
  };
  std::map<std::size_t, Bnd> bounds;

  for (std::size_t i = 0; i < nfs.size(); ++i) {
    const auto& nf = nfs[i];
    if (nf.poly.is_zero()) continue;
    auto [it, inserted] = slack_of.try_emplace(nf.poly, slack_base + slack_of.size());
    const std::size_t s = it->second;
    if (inserted) slack_poly.push_back(&it->first);
    auto& bnd = bounds[s];
    if (nf.rel != Rel::Geq) {  // Leq or Eq contributes an upper bound
      if (!bnd.up || nf.bound < bnd.up->value) bnd.up = Tableau::Bound{nf.bound, i};
    }
    if (nf.rel != Rel::Leq) {  // Geq or Eq contributes a lower bound
      if (!bnd.lo || nf.bound > bnd.lo->value) bnd.lo = Tableau::Bound{nf.bound, i};
    }
    if (bnd.lo && bnd.up && bnd.lo->value > bnd.up->value) {
      std::vector<std::size_t> core{bnd.lo->origin, bnd.up->origin};
      std::sort(core.begin(), core.end());
      return SimplexResult::unsat(std::move(core));
    }
  }

  Tableau t;
  for (std::size_t k = 0; k < slack_poly.size(); ++k) t.add_row(slack_base + k, *slack_poly[k]);
  for (const auto& [s, bnd] : bounds) {
    if (bnd.lo) t.set_lower(s, bnd.lo->value, bnd.lo->origin);
    if (bnd.up) t.set_upper(s, bnd.up->value, bnd.up->origin);
  }

  auto outcome = t.check_feasibility(opts, stats);
  if (auto* conflict = std::get_if<Tableau::Conflict>(&outcome))
    return SimplexResult::unsat(std::move(conflict->core));

  const auto& full = std::get<Assignment>(outcome);
  Assignment a;
  for (std::size_t v : original_vars) a[v] = lookup(full, v);
  return SimplexResult::sat(std::move(a));
}

}  // namespace ratlp
