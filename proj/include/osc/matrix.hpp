#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "osc/errors.hpp"
#include "osc/scalar.hpp"

namespace osc {

// Row-major rectangular matrix over any ring-like value type.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const std::vector<T>& data() const { return data_; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

using DenseMatrix = Matrix<Scalar>;

DenseMatrix zeros(std::size_t rows, std::size_t cols);
DenseMatrix identity(std::size_t n);
DenseMatrix unit(std::size_t n, std::size_t i, std::size_t j);  // E_ij, 0-based
DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator*(const Scalar& c, const DenseMatrix& a);
DenseMatrix transpose(const DenseMatrix& a);
DenseMatrix conj_transpose(const DenseMatrix& a);
DenseMatrix conj(const DenseMatrix& a);
DenseMatrix bracket(const DenseMatrix& a, const DenseMatrix& b);
Scalar trace(const DenseMatrix& a);
bool is_zero(const DenseMatrix& a);
// [[A, B], [C, D]] with square blocks of equal size.
DenseMatrix block2(const DenseMatrix& a, const DenseMatrix& b, const DenseMatrix& c,
                   const DenseMatrix& d);
DenseMatrix sub_block(const DenseMatrix& a, std::size_t r0, std::size_t c0, std::size_t rows,
                      std::size_t cols);
std::string to_string(const DenseMatrix& a);

std::size_t rank(const DenseMatrix& a);
// Throws DomainError if singular.
DenseMatrix inverse(const DenseMatrix& a);
// Basis of {x : a x = 0}.
std::vector<std::vector<Scalar>> nullspace(const DenseMatrix& a);
// Some x with a x = b, if one exists.
std::optional<std::vector<Scalar>> solve(const DenseMatrix& a, const std::vector<Scalar>& b);

using SparseVec = std::map<std::size_t, Scalar>;

// Incremental row echelon form over Q(i). Rows are normalized (pivot 1).
class RowEchelon {
 public:
  explicit RowEchelon(std::size_t ncols) : ncols_(ncols) {}

  // Reduces v by the stored rows; returns the residual.
  SparseVec reduce(SparseVec v) const;
  // Returns true if v was independent of the stored rows.
  bool insert(SparseVec v);
  std::size_t rank() const { return rows_.size(); }
  std::size_t ncols() const { return ncols_; }
  // Basis of the common kernel of the stored rows, one vector per free column.
  std::vector<SparseVec> kernel() const;

 private:
  std::size_t ncols_;
  std::map<std::size_t, SparseVec> rows_;  // pivot column -> row
};

}  // namespace osc

namespace osc {

// Products of a constant matrix with a ring-valued matrix (Poly/WeylOp entries).
template <class R>
Matrix<R> mul(const DenseMatrix& a, const Matrix<R>& m, const R& zero) {
  if (a.cols() != m.rows()) throw UsageError("mul: shape mismatch");
  Matrix<R> out(a.rows(), m.cols(), zero);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t t = 0; t < a.cols(); ++t) {
      if (a(i, t).is_zero()) continue;
      for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) += m(t, j) * a(i, t);
    }
  return out;
}

template <class R>
Matrix<R> mul(const Matrix<R>& m, const DenseMatrix& a, const R& zero) {
  if (m.cols() != a.rows()) throw UsageError("mul: shape mismatch");
  Matrix<R> out(m.rows(), a.cols(), zero);
  for (std::size_t t = 0; t < a.rows(); ++t)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(t, j).is_zero()) continue;
      for (std::size_t i = 0; i < m.rows(); ++i) out(i, j) += m(i, t) * a(t, j);
    }
  return out;
}

}  // namespace osc
