#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cf/scalar.hpp"

namespace cf {

using Vec = std::vector<Scalar>;

// Sorted (index, nonzero value) pairs.
using SparseVec = std::vector<std::pair<int, Scalar>>;

SparseVec to_sparse(const Vec& v);
Vec to_dense(const SparseVec& v, int n);
// y += a * x
void axpy(SparseVec& y, const Scalar& a, const SparseVec& x);

bool is_zero(const Vec& v);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec scale(const Scalar& s, const Vec& v);
Vec conj(const Vec& v);
Scalar dot(const Vec& a, const Vec& b);  // bilinear, no conjugation

// Dense row-major matrix; 0xn and nx0 shapes are ordinary values.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}

  static Matrix identity(int n);
  static Matrix from_rows(const std::vector<Vec>& rows, int cols);
  static Matrix from_cols(const std::vector<Vec>& cols, int rows);
  static Matrix diag(const Vec& d);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Scalar& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
  const Scalar& operator()(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

  Vec row(int i) const;
  Vec col(int j) const;
  void set_row(int i, const Vec& v);
  void set_col(int j, const Vec& v);

  Matrix transpose() const;
  Matrix conj() const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator-() const;
  Matrix scaled(const Scalar& s) const;
  Vec apply(const Vec& v) const;

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  Matrix block(int r0, int c0, int nr, int nc) const;
  Matrix select_rows(const std::vector<int>& idx) const;
  Matrix select_cols(const std::vector<int>& idx) const;
  static Matrix hstack(const Matrix& a, const Matrix& b);
  static Matrix vstack(const Matrix& a, const Matrix& b);
  static Matrix block_diag(const Matrix& a, const Matrix& b);
  static Matrix kron(const Matrix& a, const Matrix& b);

  std::vector<Vec> row_list() const;
  std::vector<SparseVec> sparse_rows() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Scalar> data_;
};

// Incremental exact elimination; keeps the accepted rows in reduced
// row-echelon form at all times.
class RowReducer {
 public:
  explicit RowReducer(int ncols);

  int ncols() const { return ncols_; }
  int rank() const { return static_cast<int>(rows_.size()); }

  // Returns true when v was independent of the rows seen so far.
  bool add(SparseVec v);
  bool add(const Vec& v) { return add(to_sparse(v)); }
  SparseVec reduce(SparseVec v) const;

  // RREF rows ordered by pivot column, and the pivot columns.
  std::vector<SparseVec> rref() const;
  std::vector<int> pivots() const;
  Matrix rref_matrix() const;
  // Basis of {x : row . x = 0 for every row}, one vector per free column.
  std::vector<Vec> nullspace() const;

 private:
  int ncols_;
  std::vector<SparseVec> rows_;
  std::vector<int> pivot_of_row_;
  std::vector<int> row_of_pivot_;
};

int rank(const Matrix& m);
Scalar det(const Matrix& m);
Matrix inverse(const Matrix& m);  // InvalidInput when singular
// Some x with m x = b, free variables set to zero.
std::optional<Vec> solve(const Matrix& m, const Vec& b);
// Basis of {x : m x = 0}.
std::vector<Vec> nullspace(const Matrix& m);

}  // namespace cf
