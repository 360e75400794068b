#pragma once

#include <cstddef>
#include <vector>

#include "latslope/rational.hpp"

namespace latslope {

// Dense row-major matrices over Z and Q. Vectors are rows throughout the
// library; maps act on the right (v -> v*A).
template <typename T>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) throw Error("matrix shape mismatch");
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + i * cols_,
                          data_.begin() + (i + 1) * cols_);
  }
  void set_row(std::size_t i, const std::vector<T>& r) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = r[j];
  }
  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c)
      std::swap((*this)(i, c), (*this)(j, c));
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  const std::vector<T>& data() const { return data_; }

 private:
  std::size_t rows_, cols_;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rat>;

template <typename T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw Error("matrix product shape mismatch");
  Matrix<T> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const T& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

template <typename T>
Matrix<T> operator+(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error("matrix sum shape mismatch");
  Matrix<T> c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
  return c;
}

template <typename T>
Matrix<T> operator-(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error("matrix difference shape mismatch");
  Matrix<T> c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
  return c;
}

// Stacks a on top of b (column counts must agree; empty blocks allowed).
template <typename T>
Matrix<T> vstack(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() == 0) return b;
  if (b.rows() == 0) return a;
  if (a.cols() != b.cols()) throw Error("vstack shape mismatch");
  Matrix<T> c(a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) c(a.rows() + i, j) = b(i, j);
  return c;
}

// Kronecker product; index (i,j) of the product maps to i*b.rows()+j on the
// row side and likewise for columns.
template <typename T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> c(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.rows(); ++j)
        for (std::size_t l = 0; l < b.cols(); ++l)
          c(i * b.rows() + j, k * b.cols() + l) = a(i, k) * b(j, l);
    }
  return c;
}

RatMatrix to_rat(const IntMatrix& m);
// Componentwise conversion; throws if any entry has denominator != 1.
IntMatrix to_int(const RatMatrix& m);

RatMatrix rat_identity(std::size_t n);
IntMatrix int_identity(std::size_t n);

IntMatrix int_matrix(std::size_t rows, std::size_t cols,
                     std::initializer_list<long> entries);
RatMatrix rat_matrix(std::size_t rows, std::size_t cols,
                     std::initializer_list<long> entries);

Int det_int(const IntMatrix& m);         // Bareiss, fraction-free
Rat det_rat(const RatMatrix& m);         // scaled Bareiss
RatMatrix inverse(const RatMatrix& m);   // throws Error when singular

struct RrefResult {
  RatMatrix mat;                 // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;
};
RrefResult rref(const RatMatrix& m);

std::size_t rank_rat(const RatMatrix& m);

// Rows spanning { x : m * x^T = 0 } over Q, in RREF-canonical form.
RatMatrix rational_kernel(const RatMatrix& m);

// Solves x * a = b for each row of b; nullopt when some row has no solution.
// `a` may be any shape; solution is the minimal-support one from the RREF.
std::optional<RatMatrix> solve_left(const RatMatrix& a, const RatMatrix& b);

// Scales each row by the lcm of denominators and divides by the gcd, giving a
// primitive integer matrix with the same row span.
IntMatrix clear_denominators(const RatMatrix& m);

bool is_symmetric(const RatMatrix& m);
// Positive definiteness via leading principal minors.
bool is_positive_definite(const RatMatrix& m);

}  // namespace latslope
