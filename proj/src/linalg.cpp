#include "ratlp/linalg.hpp"

#include <stdexcept>

namespace ratlp {

const Rat& Vec::operator[](std::size_t i) const {
  if (i >= e_.size()) throw std::out_of_range("Vec index out of range");
  return e_[i];
}

Rat& Vec::operator[](std::size_t i) {
  if (i >= e_.size()) throw std::out_of_range("Vec index out of range");
  return e_[i];
}

Mat::Mat(std::initializer_list<std::initializer_list<Rat>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  e_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("Mat rows have unequal lengths");
    e_.insert(e_.end(), r.begin(), r.end());
  }
}

const Rat& Mat::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw std::out_of_range("Mat index out of range");
  return e_[i * cols_ + j];
}

Rat& Mat::at(std::size_t i, std::size_t j) {
  if (i >= rows_ || j >= cols_) throw std::out_of_range("Mat index out of range");
  return e_[i * cols_ + j];
}

Vec Mat::row(std::size_t i) const {
  if (i >= rows_) throw std::out_of_range("Mat row out of range");
  Vec r(cols_);
  for (std::size_t j = 0; j < cols_; ++j) r[j] = e_[i * cols_ + j];
  return r;
}

Rat dot(const Vec& u, const Vec& v) {
  if (u.dim() != v.dim()) throw std::invalid_argument("dot: dimension mismatch");
  Rat s;
  for (std::size_t i = 0; i < u.dim(); ++i) s += u[i] * v[i];
  return s;
}

Vec mul(const Mat& a, const Vec& x) {
  if (a.cols() != x.dim()) throw std::invalid_argument("mul(Mat, Vec): dimension mismatch");
  Vec r(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Rat s;
    for (std::size_t j = 0; j < a.cols(); ++j) s += a.at(i, j) * x[j];
    r[i] = s;
  }
  return r;
}

Vec mul(const Vec& y, const Mat& a) {
  if (y.dim() != a.rows()) throw std::invalid_argument("mul(Vec, Mat): dimension mismatch");
  Vec r(a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    Rat s;
    for (std::size_t i = 0; i < a.rows(); ++i) s += y[i] * a.at(i, j);
    r[j] = s;
  }
  return r;
}

Mat transpose(const Mat& a) {
  Mat t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t.at(j, i) = a.at(i, j);
  return t;
}

Mat block_diag(const Mat& a, const Mat& b) {
  Mat r(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) r.at(a.rows() + i, a.cols() + j) = b.at(i, j);
  return r;
}

Vec concat(const Vec& u, const Vec& v) {
  Vec r(u.dim() + v.dim());
  for (std::size_t i = 0; i < u.dim(); ++i) r[i] = u[i];
  for (std::size_t i = 0; i < v.dim(); ++i) r[u.dim() + i] = v[i];
  return r;
}

bool leq_pointwise(const Vec& u, const Vec& v) {
  if (u.dim() != v.dim()) throw std::invalid_argument("leq_pointwise: dimension mismatch");
  for (std::size_t i = 0; i < u.dim(); ++i)
    if (u[i] > v[i]) return false;
  return true;
}

}  // namespace ratlp
