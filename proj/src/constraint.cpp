#include "ratlp/constraint.hpp"

#include <sstream>
#include <stdexcept>

namespace ratlp {

bool rel_holds(const Rat& lhs, Rel rel, const Rat& rhs) {
  switch (rel) {
    case Rel::Leq: return lhs <= rhs;
    case Rel::Eq: return lhs == rhs;
    case Rel::Geq: return lhs >= rhs;
  }
  throw std::logic_error("rel_holds: bad relation");
}

ConstraintNF normalize(const Constraint& c) {
  return {c.lhs.poly - c.rhs.poly, c.rel, c.rhs.constant - c.lhs.constant};
}

std::vector<ConstraintNF> normalize(std::span<const Constraint> cs) {
  std::vector<ConstraintNF> nfs;
  nfs.reserve(cs.size());
  for (const auto& c : cs) nfs.push_back(normalize(c));
  return nfs;
}

bool satisfies(const Constraint& c, const Assignment& a) {
  return rel_holds(c.lhs.eval(a), c.rel, c.rhs.eval(a));
}

bool satisfies(const ConstraintNF& c, const Assignment& a) {
  return rel_holds(c.poly.eval(a), c.rel, c.bound);
}

std::vector<Constraint> var_lower_bounds(std::size_t first_var, const Vec& bounds) {
  std::vector<Constraint> cs;
  cs.reserve(bounds.dim());
  for (std::size_t i = 0; i < bounds.dim(); ++i)
    cs.push_back({Affine(LinPoly::monom(1, first_var + i)), Rel::Geq, Affine(bounds[i])});
  return cs;
}

std::vector<Constraint> primal_dual_rows(const Mat& a, const Vec& b, const Vec& c) {
  if (b.dim() != a.rows() || c.dim() != a.cols())
    throw std::invalid_argument("primal_dual_rows: dimension mismatch");
  // block_diag keeps the primal rows on x (vars 0..cols-1) and the transposed
  // rows on y (vars cols..cols+rows-1).
  const auto polys = polys_from_matrix(block_diag(a, transpose(a)));
  const Vec rhs = concat(b, c);
  std::vector<Constraint> cs;
  cs.reserve(polys.size());
  for (std::size_t i = 0; i < polys.size(); ++i) {
    const Rel rel = i < b.dim() ? Rel::Leq : Rel::Eq;
    cs.push_back({Affine(polys[i]), rel, Affine(rhs[i])});
  }
  return cs;
}

Constraint objective_coupling(const Vec& c, const Vec& b) {
  const Vec lhs = concat(c, Vec(b.dim()));
  const Vec rhs = concat(Vec(c.dim()), b);
  return {Affine(poly_from_vec(lhs)), Rel::Geq, Affine(poly_from_vec(rhs))};
}

std::vector<Constraint> build_system(const Mat& a, const Vec& b, const Vec& c) {
  std::vector<Constraint> cs;
  cs.reserve(1 + a.rows() + a.cols() + b.dim());
  cs.push_back(objective_coupling(c, b));
  auto rows = primal_dual_rows(a, b, c);
  cs.insert(cs.end(), std::make_move_iterator(rows.begin()), std::make_move_iterator(rows.end()));
  auto nonneg = var_lower_bounds(c.dim(), Vec(b.dim()));
  cs.insert(cs.end(), std::make_move_iterator(nonneg.begin()),
            std::make_move_iterator(nonneg.end()));
  return cs;
}

std::string to_string(Rel rel) {
  switch (rel) {
    case Rel::Leq: return "<=";
    case Rel::Eq: return "=";
    case Rel::Geq: return ">=";
  }
  throw std::logic_error("to_string: bad relation");
}

std::string to_string(const LinPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [var, c] : p.terms()) {
    if (first) {
      if (c == Rat(-1)) {
        os << "-";
      } else if (c != Rat(1)) {
        os << c << "*";
      }
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
      const Rat m = abs(c);
      if (m != Rat(1)) os << m << "*";
    }
    os << "x" << var;
    first = false;
  }
  return os.str();
}

std::string to_string(const Affine& a) {
  if (a.poly.is_zero()) return a.constant.to_string();
  std::string s = to_string(a.poly);
  if (a.constant.sign() > 0) {
    s += " + " + a.constant.to_string();
  } else if (a.constant.sign() < 0) {
    s += " - " + abs(a.constant).to_string();
  }
  return s;
}

std::string to_string(const Constraint& c) {
  return to_string(c.lhs) + " " + to_string(c.rel) + " " + to_string(c.rhs);
}

std::string to_string(const ConstraintNF& c) {
  return to_string(c.poly) + " " + to_string(c.rel) + " " + c.bound.to_string();
}

}  // namespace ratlp
