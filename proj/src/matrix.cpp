#include "cf/matrix.hpp"

#include <algorithm>

#include "cf/errors.hpp"

namespace cf {

SparseVec to_sparse(const Vec& v) {
  SparseVec s;
  for (int i = 0; i < static_cast<int>(v.size()); ++i)
    if (!v[i].is_zero()) s.emplace_back(i, v[i]);
  return s;
}

Vec to_dense(const SparseVec& v, int n) {
  Vec d(n);
  for (const auto& [i, x] : v) d[i] = x;
  return d;
}

void axpy(SparseVec& y, const Scalar& a, const SparseVec& x) {
  if (a.is_zero() || x.empty()) return;
  SparseVec out;
  out.reserve(y.size() + x.size());
  size_t i = 0, j = 0;
  while (i < y.size() || j < x.size()) {
    if (j == x.size() || (i < y.size() && y[i].first < x[j].first)) {
      out.push_back(std::move(y[i++]));
    } else if (i == y.size() || x[j].first < y[i].first) {
      out.emplace_back(x[j].first, a * x[j].second);
      ++j;
    } else {
      Scalar s = std::move(y[i].second);
      s.add_mul(a, x[j].second);
      if (!s.is_zero()) out.emplace_back(x[j].first, std::move(s));
      ++i;
      ++j;
    }
  }
  y.swap(out);
}

static const Scalar* sparse_at(const SparseVec& v, int c) {
  auto it = std::lower_bound(v.begin(), v.end(), c,
                             [](const std::pair<int, Scalar>& e, int k) { return e.first < k; });
  if (it != v.end() && it->first == c) return &it->second;
  return nullptr;
}

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vec operator+(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw InvalidInput("vector length mismatch");
  Vec r(a);
  for (size_t i = 0; i < a.size(); ++i) r[i] += b[i];
  return r;
}

Vec operator-(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw InvalidInput("vector length mismatch");
  Vec r(a);
  for (size_t i = 0; i < a.size(); ++i) r[i] -= b[i];
  return r;
}

Vec scale(const Scalar& s, const Vec& v) {
  Vec r(v);
  for (auto& x : r) x *= s;
  return r;
}

Vec conj(const Vec& v) {
  Vec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = v[i].conj();
  return r;
}

Scalar dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw InvalidInput("vector length mismatch");
  Scalar s;
  for (size_t i = 0; i < a.size(); ++i) s.add_mul(a[i], b[i]);
  return s;
}

// ---------------------------------------------------------------- Matrix

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, int cols) {
  Matrix m(static_cast<int>(rows.size()), cols);
  for (int i = 0; i < m.rows(); ++i) m.set_row(i, rows[i]);
  return m;
}

Matrix Matrix::from_cols(const std::vector<Vec>& cols, int rows) {
  Matrix m(rows, static_cast<int>(cols.size()));
  for (int j = 0; j < m.cols(); ++j) m.set_col(j, cols[j]);
  return m;
}

Matrix Matrix::diag(const Vec& d) {
  Matrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
  for (int i = 0; i < m.rows(); ++i) m(i, i) = d[i];
  return m;
}

Vec Matrix::row(int i) const {
  return Vec(data_.begin() + static_cast<long>(i) * cols_, data_.begin() + static_cast<long>(i + 1) * cols_);
}

Vec Matrix::col(int j) const {
  Vec v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

void Matrix::set_row(int i, const Vec& v) {
  if (static_cast<int>(v.size()) != cols_) throw InvalidInput("row width mismatch");
  for (int j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
}

void Matrix::set_col(int j, const Vec& v) {
  if (static_cast<int>(v.size()) != rows_) throw InvalidInput("column height mismatch");
  for (int i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::conj() const {
  Matrix c(rows_, cols_);
  for (size_t k = 0; k < data_.size(); ++k) c.data_[k] = data_[k].conj();
  return c;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw InvalidInput("matrix product shape mismatch");
  Matrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Scalar& b = o(k, j);
        if (!b.is_zero()) r(i, j).add_mul(a, b);
      }
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidInput("matrix sum shape mismatch");
  Matrix r(*this);
  for (size_t k = 0; k < data_.size(); ++k) r.data_[k] += o.data_[k];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidInput("matrix difference shape mismatch");
  Matrix r(*this);
  for (size_t k = 0; k < data_.size(); ++k) r.data_[k] -= o.data_[k];
  return r;
}

Matrix Matrix::operator-() const {
  Matrix r(*this);
  for (auto& x : r.data_) x = -x;
  return r;
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix r(*this);
  for (auto& x : r.data_) x *= s;
  return r;
}

Vec Matrix::apply(const Vec& v) const {
  if (static_cast<int>(v.size()) != cols_) throw InvalidInput("matrix-vector shape mismatch");
  Vec r(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r[i].add_mul((*this)(i, j), v[j]);
  return r;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

Matrix Matrix::block(int r0, int c0, int nr, int nc) const {
  if (r0 < 0 || c0 < 0 || r0 + nr > rows_ || c0 + nc > cols_) throw InvalidInput("block out of range");
  Matrix b(nr, nc);
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

Matrix Matrix::select_rows(const std::vector<int>& idx) const {
  Matrix m(static_cast<int>(idx.size()), cols_);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < cols_; ++j) m(i, j) = (*this)(idx[i], j);
  return m;
}

Matrix Matrix::select_cols(const std::vector<int>& idx) const {
  Matrix m(rows_, static_cast<int>(idx.size()));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < m.cols(); ++j) m(i, j) = (*this)(i, idx[j]);
  return m;
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_) throw InvalidInput("hstack height mismatch");
  Matrix m(a.rows_, a.cols_ + b.cols_);
  for (int i = 0; i < a.rows_; ++i) {
    for (int j = 0; j < a.cols_; ++j) m(i, j) = a(i, j);
    for (int j = 0; j < b.cols_; ++j) m(i, a.cols_ + j) = b(i, j);
  }
  return m;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.cols_) throw InvalidInput("vstack width mismatch");
  Matrix m(a.rows_ + b.rows_, a.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int j = 0; j < a.cols_; ++j) m(i, j) = a(i, j);
  for (int i = 0; i < b.rows_; ++i)
    for (int j = 0; j < b.cols_; ++j) m(a.rows_ + i, j) = b(i, j);
  return m;
}

Matrix Matrix::block_diag(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows_ + b.rows_, a.cols_ + b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int j = 0; j < a.cols_; ++j) m(i, j) = a(i, j);
  for (int i = 0; i < b.rows_; ++i)
    for (int j = 0; j < b.cols_; ++j) m(a.rows_ + i, a.cols_ + j) = b(i, j);
  return m;
}

Matrix Matrix::kron(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows_ * b.rows_, a.cols_ * b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int j = 0; j < a.cols_; ++j) {
      const Scalar& x = a(i, j);
      if (x.is_zero()) continue;
      for (int k = 0; k < b.rows_; ++k)
        for (int l = 0; l < b.cols_; ++l)
          if (!b(k, l).is_zero()) m(i * b.rows_ + k, j * b.cols_ + l) = x * b(k, l);
    }
  return m;
}

std::vector<Vec> Matrix::row_list() const {
  std::vector<Vec> r;
  for (int i = 0; i < rows_; ++i) r.push_back(row(i));
  return r;
}

std::vector<SparseVec> Matrix::sparse_rows() const {
  std::vector<SparseVec> r(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (!(*this)(i, j).is_zero()) r[i].emplace_back(j, (*this)(i, j));
  return r;
}

// ---------------------------------------------------------------- RowReducer

RowReducer::RowReducer(int ncols) : ncols_(ncols), row_of_pivot_(ncols, -1) {}

SparseVec RowReducer::reduce(SparseVec v) const {
  // Accepted rows vanish on each other's pivot columns, so the pivot-column
  // coefficients of v can be read off once up front.
  std::vector<std::pair<int, Scalar>> hits;
  for (const auto& [c, x] : v)
    if (row_of_pivot_[c] >= 0) hits.emplace_back(row_of_pivot_[c], x);
  for (const auto& [r, x] : hits) axpy(v, -x, rows_[r]);
  return v;
}

bool RowReducer::add(SparseVec v) {
  for (const auto& e : v)
    if (e.first < 0 || e.first >= ncols_) throw InvalidInput("row index outside reducer width");
  v = reduce(std::move(v));
  if (v.empty()) return false;
  int p = v.front().first;
  if (!v.front().second.is_one()) {
    Scalar inv = v.front().second.inv();
    for (auto& e : v) e.second *= inv;
  }
  for (auto& row : rows_) {
    const Scalar* x = sparse_at(row, p);
    if (x) {
      Scalar c = *x;
      axpy(row, -c, v);
    }
  }
  row_of_pivot_[p] = static_cast<int>(rows_.size());
  pivot_of_row_.push_back(p);
  rows_.push_back(std::move(v));
  return true;
}

std::vector<int> RowReducer::pivots() const {
  std::vector<int> p = pivot_of_row_;
  std::sort(p.begin(), p.end());
  return p;
}

std::vector<SparseVec> RowReducer::rref() const {
  std::vector<SparseVec> out;
  for (int p : pivots()) out.push_back(rows_[row_of_pivot_[p]]);
  return out;
}

Matrix RowReducer::rref_matrix() const {
  auto rows = rref();
  Matrix m(static_cast<int>(rows.size()), ncols_);
  for (int i = 0; i < m.rows(); ++i)
    for (const auto& [c, x] : rows[i]) m(i, c) = x;
  return m;
}

std::vector<Vec> RowReducer::nullspace() const {
  std::vector<Vec> out;
  for (int f = 0; f < ncols_; ++f) {
    if (row_of_pivot_[f] >= 0) continue;
    Vec x(ncols_);
    x[f] = 1;
    for (size_t r = 0; r < rows_.size(); ++r) {
      const Scalar* v = sparse_at(rows_[r], f);
      if (v) x[pivot_of_row_[r]] = -*v;
    }
    out.push_back(std::move(x));
  }
  return out;
}

// ---------------------------------------------------------------- helpers

int rank(const Matrix& m) {
  RowReducer r(m.cols());
  for (auto& row : m.sparse_rows()) r.add(std::move(row));
  return r.rank();
}

Scalar det(const Matrix& m) {
  if (!m.is_square()) throw InvalidInput("determinant of a non-square matrix");
  int n = m.rows();
  Matrix a(m);
  Scalar d(1);
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int r = c; r < n; ++r)
      if (!a(r, c).is_zero()) {
        p = r;
        break;
      }
    if (p < 0) return Scalar(0);
    if (p != c) {
      for (int j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      d = -d;
    }
    d *= a(c, c);
    Scalar inv = a(c, c).inv();
    for (int r = c + 1; r < n; ++r) {
      if (a(r, c).is_zero()) continue;
      Scalar f = a(r, c) * inv;
      for (int j = c; j < n; ++j) a(r, j).sub_mul(f, a(c, j));
    }
  }
  return d;
}

Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw InvalidInput("inverse of a non-square matrix");
  int n = m.rows();
  RowReducer r(2 * n);
  for (int i = 0; i < n; ++i) {
    SparseVec row;
    for (int j = 0; j < n; ++j)
      if (!m(i, j).is_zero()) row.emplace_back(j, m(i, j));
    row.emplace_back(n + i, Scalar(1));
    r.add(std::move(row));
  }
  auto rows = r.rref();
  if (static_cast<int>(rows.size()) != n || (n > 0 && rows.back().front().first != n - 1))
    throw InvalidInput("matrix is singular");
  Matrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (const auto& [c, x] : rows[i])
      if (c >= n) inv(i, c - n) = x;
  return inv;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
  if (static_cast<int>(b.size()) != m.rows()) throw InvalidInput("right-hand side length mismatch");
  int n = m.cols();
  RowReducer r(n + 1);
  for (int i = 0; i < m.rows(); ++i) {
    SparseVec row;
    for (int j = 0; j < n; ++j)
      if (!m(i, j).is_zero()) row.emplace_back(j, m(i, j));
    if (!b[i].is_zero()) row.emplace_back(n, b[i]);
    r.add(std::move(row));
  }
  Vec x(n);
  for (const auto& row : r.rref()) {
    int p = row.front().first;
    if (p == n) return std::nullopt;
    const Scalar* v = sparse_at(row, n);
    if (v) x[p] = *v;
  }
  return x;
}

std::vector<Vec> nullspace(const Matrix& m) {
  RowReducer r(m.cols());
  for (auto& row : m.sparse_rows()) r.add(std::move(row));
  return r.nullspace();
}

}  // namespace cf
