#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "ratlp/rational.hpp"

namespace ratlp {

/// Dense column vector of exact rationals.  Access is bounds-checked.
class Vec {
public:
  Vec() = default;
  explicit Vec(std::size_t dim) : e_(dim) {}
  Vec(std::initializer_list<Rat> entries) : e_(entries) {}

  std::size_t dim() const { return e_.size(); }

  const Rat& operator[](std::size_t i) const;
  Rat& operator[](std::size_t i);

  auto begin() const { return e_.begin(); }
  auto end() const { return e_.end(); }

  friend bool operator==(const Vec& a, const Vec& b) = default;

private:
  std::vector<Rat> e_;
};

/// Dense row-major matrix of exact rationals.  Access is bounds-checked.
class Mat {
public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}
  /// Rows must all have the same length; throws std::invalid_argument otherwise.
  Mat(std::initializer_list<std::initializer_list<Rat>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Rat& at(std::size_t i, std::size_t j) const;
  Rat& at(std::size_t i, std::size_t j);

  Vec row(std::size_t i) const;

  friend bool operator==(const Mat& a, const Mat& b) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> e_;  // row-major
};

/// Inner product; dimensions must agree.
Rat dot(const Vec& u, const Vec& v);

/// Matrix-vector product a·x; dim(x) must equal a.cols().
Vec mul(const Mat& a, const Vec& x);

/// Vector-matrix product y·a (y as a row vector); dim(y) must equal a.rows().
Vec mul(const Vec& y, const Mat& a);

Mat transpose(const Mat& a);

/// Places a and b on the diagonal of a larger matrix, zeros elsewhere:
/// rows(a)+rows(b) by cols(a)+cols(b).
Mat block_diag(const Mat& a, const Mat& b);

/// Concatenation [u; v].
Vec concat(const Vec& u, const Vec& v);

/// Entrywise u <= v; dimensions must agree.
bool leq_pointwise(const Vec& u, const Vec& v);

}  // namespace ratlp
