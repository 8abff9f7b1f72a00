#include "ratlp/linpoly.hpp"

namespace ratlp {

Rat lookup(const Assignment& a, std::size_t var) {
  auto it = a.find(var);
  return it == a.end() ? Rat() : it->second;
}

LinPoly LinPoly::monom(const Rat& coeff, std::size_t var) {
  LinPoly p;
  if (!coeff.is_zero()) p.terms_[var] = coeff;
  return p;
}

Rat LinPoly::coeff(std::size_t var) const {
  auto it = terms_.find(var);
  return it == terms_.end() ? Rat() : it->second;
}

void LinPoly::add_term(std::size_t var, const Rat& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(var, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::size_t LinPoly::dim() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first + 1;
}

Rat LinPoly::eval(const Assignment& a) const {
  Rat s;
  for (const auto& [var, c] : terms_) s += c * lookup(a, var);
  return s;
}

LinPoly& LinPoly::operator+=(const LinPoly& o) {
  for (const auto& [var, c] : o.terms_) add_term(var, c);
  return *this;
}

LinPoly& LinPoly::operator-=(const LinPoly& o) {
  for (const auto& [var, c] : o.terms_) add_term(var, -c);
  return *this;
}

LinPoly LinPoly::operator-() const {
  LinPoly r;
  for (const auto& [var, c] : terms_) r.terms_[var] = -c;
  return r;
}

LinPoly operator*(const Rat& s, const LinPoly& p) {
  LinPoly r;
  if (s.is_zero()) return r;
  for (const auto& [var, c] : p.terms_) r.terms_[var] = s * c;
  return r;
}

std::strong_ordering operator<=>(const LinPoly& a, const LinPoly& b) {
  auto ia = a.terms_.begin(), ib = b.terms_.begin();
  for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
    if (auto c = ia->first <=> ib->first; c != 0) return c;
    if (auto c = ia->second <=> ib->second; c != 0) return c;
  }
  if (ia != a.terms_.end()) return std::strong_ordering::greater;
  if (ib != b.terms_.end()) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

LinPoly poly_from_coeffs(const std::vector<Rat>& coeffs) {
  LinPoly p;
  for (std::size_t i = 0; i < coeffs.size(); ++i) p.add_term(i, coeffs[i]);
  return p;
}

LinPoly poly_from_vec(const Vec& v) {
  LinPoly p;
  for (std::size_t i = 0; i < v.dim(); ++i) p.add_term(i, v[i]);
  return p;
}

Vec vec_from_poly(const LinPoly& p) {
  Vec v(p.dim());
  for (const auto& [var, c] : p.terms()) v[var] = c;
  return v;
}

std::vector<LinPoly> polys_from_matrix(const Mat& a) {
  std::vector<LinPoly> ps;
  ps.reserve(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) ps.push_back(poly_from_vec(a.row(i)));
  return ps;
}

Mat matrix_from_polys(const std::vector<LinPoly>& ps) {
  std::size_t cols = 0;
  for (const auto& p : ps) cols = std::max(cols, p.dim());
  Mat a(ps.size(), cols);
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (const auto& [var, c] : ps[i].terms()) a.at(i, var) = c;
  return a;
}

}  // namespace ratlp
