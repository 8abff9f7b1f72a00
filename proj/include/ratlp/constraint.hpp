#pragma once

#include <span>
#include <string>
#include <vector>

#include "ratlp/linalg.hpp"
#include "ratlp/linpoly.hpp"
#include "ratlp/rational.hpp"

namespace ratlp {

enum class Rel { Leq, Eq, Geq };

/// One side of a constraint: a linear polynomial plus a constant offset.
struct Affine {
  LinPoly poly;
  Rat constant;

  Affine() = default;
  Affine(LinPoly p) : poly(std::move(p)) {}
  Affine(Rat c) : constant(std::move(c)) {}
  Affine(LinPoly p, Rat c) : poly(std::move(p)), constant(std::move(c)) {}

  Rat eval(const Assignment& a) const { return poly.eval(a) + constant; }

  friend bool operator==(const Affine& a, const Affine& b) = default;
};

/// lhs rel rhs, with affine expressions on both sides.
struct Constraint {
  Affine lhs;
  Rel rel;
  Affine rhs;

  friend bool operator==(const Constraint& a, const Constraint& b) = default;
};

/// Normal form: all variables on the left, constant on the right.
struct ConstraintNF {
  LinPoly poly;
  Rel rel;
  Rat bound;

  friend bool operator==(const ConstraintNF& a, const ConstraintNF& b) = default;
};

bool rel_holds(const Rat& lhs, Rel rel, const Rat& rhs);

/// Moves variables left and constants right without changing the relation:
/// (lhs.poly - rhs.poly) rel (rhs.constant - lhs.constant).
ConstraintNF normalize(const Constraint& c);
std::vector<ConstraintNF> normalize(std::span<const Constraint> cs);

bool satisfies(const Constraint& c, const Assignment& a);
bool satisfies(const ConstraintNF& c, const Assignment& a);

/// Constraints var(first_var + i) >= bounds[i] for each i.
std::vector<Constraint> var_lower_bounds(std::size_t first_var, const Vec& bounds);

/// Primal rows a·x <= b over x = vars 0..cols-1, followed by dual rows
/// transpose(a)·y = c over y = vars cols..cols+rows-1.  The two groups do not
/// share variables, which is what makes stacking them into one system sound.
std::vector<Constraint> primal_dual_rows(const Mat& a, const Vec& b, const Vec& c);

/// c·x >= b·y over the same variable split as primal_dual_rows.  Weak duality
/// gives c·x <= b·y for any primal-feasible x and dual-feasible y, so together
/// with the rows above this forces equality, i.e. optimality of both.
Constraint objective_coupling(const Vec& c, const Vec& b);

/// The full constraint system whose satisfying assignments are exactly the
/// pairs (x, y) of optimal primal and dual solutions for max c·x s.t. a·x <= b:
/// index 0 is the objective coupling, 1..rows+cols are the primal/dual rows,
/// and the final rows entries require y >= 0.
std::vector<Constraint> build_system(const Mat& a, const Vec& b, const Vec& c);

std::string to_string(Rel rel);
std::string to_string(const LinPoly& p);
std::string to_string(const Affine& a);
std::string to_string(const Constraint& c);
std::string to_string(const ConstraintNF& c);

}  // namespace ratlp
