#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "symleib/rational.hpp"
#include "symleib/scalar.hpp"

namespace symleib {

using Vector = std::vector<Scalar>;
using QVector = std::vector<Rational>;

// Dense row-major matrix. Dimensions are fixed at construction.
template <class T>
class BasicMatrix {
 public:
  BasicMatrix() = default;
  BasicMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  BasicMatrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : init) {
      if (r.size() != cols_) throw std::invalid_argument("ragged matrix initializer");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static BasicMatrix identity(std::size_t n) {
    BasicMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }
  static BasicMatrix from_columns(const std::vector<std::vector<T>>& cols, std::size_t rows) {
    BasicMatrix m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (cols[c].size() != rows) throw std::invalid_argument("column length mismatch");
      for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
    }
    return m;
  }
  static BasicMatrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols) {
    BasicMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) throw std::invalid_argument("row length mismatch");
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<T> row(std::size_t r) const {
    return std::vector<T>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
  }
  std::vector<T> col(std::size_t c) const {
    std::vector<T> v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
    return v;
  }

  BasicMatrix transpose() const {
    BasicMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend bool operator==(const BasicMatrix& a, const BasicMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend BasicMatrix operator*(const BasicMatrix& a, const BasicMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product dimension mismatch");
    BasicMatrix m(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) += aik * b(k, j);
      }
    return m;
  }
  friend std::vector<T> operator*(const BasicMatrix& a, const std::vector<T>& v) {
    if (a.cols_ != v.size()) throw std::invalid_argument("matrix-vector dimension mismatch");
    std::vector<T> out(a.rows_, T(0));
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) out[i] += a(i, k) * v[k];
    return out;
  }
  friend BasicMatrix operator+(BasicMatrix a, const BasicMatrix& b) {
    a.check_same(b);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }
  friend BasicMatrix operator-(BasicMatrix a, const BasicMatrix& b) {
    a.check_same(b);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }

 private:
  void check_same(const BasicMatrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw std::invalid_argument("matrix dimension mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using Matrix = BasicMatrix<Scalar>;
using QMatrix = BasicMatrix<Rational>;

template <class T>
struct RowReduction {
  BasicMatrix<T> reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

RowReduction<Rational> row_reduce(const QMatrix& m);
// Rejects matrices with floating entries.
RowReduction<Scalar> row_reduce(const Matrix& m);

std::vector<QVector> kernel_basis(const QMatrix& m);
std::vector<Vector> kernel_basis(const Matrix& m);

// Throws std::domain_error when singular.
QMatrix inverse(const QMatrix& m);
// Exact when every entry is exact; partial-pivot Gauss-Jordan otherwise.
Matrix inverse(const Matrix& m);
Rational determinant(const QMatrix& m);

QMatrix to_exact(const Matrix& m);  // throws std::invalid_argument on floating entries
Matrix to_scalar(const QMatrix& m);
QVector to_exact(const Vector& v);
Vector to_scalar(const QVector& v);

bool is_zero(const QVector& v);

// Largest scaled entrywise deviation (see symleib::deviation).
double max_deviation(const Vector& a, const Vector& b);
double max_deviation(const Matrix& a, const Matrix& b);

std::string to_string(const Vector& v);
std::string to_string(const QVector& v);

}  // namespace symleib
