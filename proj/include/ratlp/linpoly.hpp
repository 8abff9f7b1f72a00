#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <vector>

#include "ratlp/linalg.hpp"
#include "ratlp/rational.hpp"

namespace ratlp {

/// Partial valuation of variables; variables not present are read as 0.
using Assignment = std::map<std::size_t, Rat>;

/// Value of a variable under an assignment (0 when unassigned).
Rat lookup(const Assignment& a, std::size_t var);

/// Sparse homogeneous linear polynomial: a finite map from variable index to a
/// nonzero rational coefficient.  Zero coefficients are never stored, so two
/// polynomials are equal exactly when they are structurally equal.
class LinPoly {
public:
  LinPoly() = default;  // the zero polynomial

  /// coeff * var; the zero polynomial when coeff == 0.
  static LinPoly monom(const Rat& coeff, std::size_t var);

  /// Coefficient of var, 0 when absent.
  Rat coeff(std::size_t var) const;

  /// Adds c to the coefficient of var, erasing it if the sum is zero.
  void add_term(std::size_t var, const Rat& c);

  bool is_zero() const { return terms_.empty(); }

  /// 0 for the zero polynomial, otherwise 1 + largest variable index.
  std::size_t dim() const;

  const std::map<std::size_t, Rat>& terms() const { return terms_; }

  /// Exact value under the assignment (unassigned variables read 0).
  Rat eval(const Assignment& a) const;

  LinPoly& operator+=(const LinPoly& o);
  LinPoly& operator-=(const LinPoly& o);
  friend LinPoly operator+(LinPoly a, const LinPoly& b) { return a += b; }
  friend LinPoly operator-(LinPoly a, const LinPoly& b) { return a -= b; }
  LinPoly operator-() const;
  friend LinPoly operator*(const Rat& s, const LinPoly& p);

  friend bool operator==(const LinPoly& a, const LinPoly& b) = default;
  /// Lexicographic order on the (index, coefficient) term lists, so polynomials
  /// can key deterministic std::maps.
  friend std::strong_ordering operator<=>(const LinPoly& a, const LinPoly& b);

private:
  std::map<std::size_t, Rat> terms_;
};

/// coeffs[i] becomes the coefficient of variable i (zeros dropped).
LinPoly poly_from_coeffs(const std::vector<Rat>& coeffs);
LinPoly poly_from_vec(const Vec& v);

/// Dense coefficient vector of length p.dim().
Vec vec_from_poly(const LinPoly& p);

/// One polynomial per matrix row.
std::vector<LinPoly> polys_from_matrix(const Mat& a);

/// Rows from polynomials, padded with zeros to the widest dimension.
Mat matrix_from_polys(const std::vector<LinPoly>& ps);

}  // namespace ratlp
