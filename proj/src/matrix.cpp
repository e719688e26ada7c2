#include "coringlab/matrix.hpp"

#include <ostream>
#include <string>

#include "coringlab/kernels.hpp"

namespace coringlab {

Vector zero_vector(const Field& f, std::size_t n) { return Vector(n, Scalar::zero(f)); }

Vector unit_vector(const Field& f, std::size_t n, std::size_t i) {
  Vector v = zero_vector(f, n);
  v.at(i) = Scalar::one(f);
  return v;
}

bool is_zero(const Vector& v) {
  for (const auto& s : v) {
    if (!s.is_zero()) return false;
  }
  return true;
}

Vector add(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw ShapeError("vector length mismatch in add");
  Vector r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vector subtract(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw ShapeError("vector length mismatch in subtract");
  Vector r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vector scaled(const Vector& v, const Scalar& s) {
  Vector r(v);
  for (auto& x : r) x *= s;
  return r;
}

void axpy(Vector& a, const Scalar& s, const Vector& b) {
  if (a.size() != b.size()) throw ShapeError("vector length mismatch in axpy");
  if (s.is_zero()) return;
  for (std::size_t i = 0; i < a.size(); ++i) a[i].add_mul(s, b[i]);
}

Matrix::Matrix(const Field& f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(const Field& f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::from_ints(const Field& f, std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows.begin()->size();
  Matrix m(f, r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw ShapeError("ragged rows in Matrix::from_ints");
    std::size_t j = 0;
    for (auto v : row) m(i, j++) = Scalar::from_int(f, v);
    ++i;
  }
  return m;
}

Matrix Matrix::from_rows(const Field& f, std::size_t cols, const std::vector<Vector>& rows) {
  Matrix m(f, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  return m;
}

Matrix Matrix::from_columns(const Field& f, std::size_t rows, const std::vector<Vector>& cols) {
  Matrix m(f, rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) m.set_col(j, cols[j]);
  return m;
}

Matrix Matrix::column(const Field& f, const Vector& v) { return from_columns(f, v.size(), {v}); }

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::col(std::size_t c) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

void Matrix::set_row(std::size_t r, const Vector& v) {
  if (v.size() != cols_) throw ShapeError("set_row: length mismatch");
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = v[c];
}

void Matrix::set_col(std::size_t c, const Vector& v) {
  if (v.size() != rows_) throw ShapeError("set_col: length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw ShapeError("block out of range");
  Matrix b(field_, nr, nc);
  for (std::size_t r = 0; r < nr; ++r) {
    for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
  }
  return b;
}

Matrix Matrix::select_columns(const std::vector<std::size_t>& idx) const {
  Matrix m(field_, rows_, idx.size());
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t j = 0; j < idx.size(); ++j) m(r, j) = (*this)(r, idx[j]);
  }
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& s : data_) {
    if (!s.is_zero()) return false;
  }
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      const Scalar& s = (*this)(r, c);
      if (r == c ? !s.is_one() : !s.is_zero()) return false;
    }
  }
  return true;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw ShapeError("matrix shape mismatch in +");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw ShapeError("matrix shape mismatch in -");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) { return kernels::parallel::multiply(a, b); }

Vector operator*(const Matrix& a, const Vector& v) {
  if (a.cols() != v.size()) {
    throw ShapeError("matrix-vector shape mismatch: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                     " times " + std::to_string(v.size()));
  }
  Vector r = zero_vector(a.field(), a.rows());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    if (v[j].is_zero()) continue;
    for (std::size_t i = 0; i < a.rows(); ++i) r[i].add_mul(a(i, j), v[j]);
  }
  return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Matrix Matrix::hstack(const Field& f, std::size_t rows, const std::vector<Matrix>& parts) {
  std::size_t cols = 0;
  for (const auto& p : parts) {
    if (p.rows() != rows) throw ShapeError("hstack: row count mismatch");
    cols += p.cols();
  }
  Matrix m(f, rows, cols);
  std::size_t off = 0;
  for (const auto& p : parts) {
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < p.cols(); ++c) m(r, off + c) = p(r, c);
    }
    off += p.cols();
  }
  return m;
}

Matrix Matrix::vstack(const Field& f, std::size_t cols, const std::vector<Matrix>& parts) {
  std::size_t rows = 0;
  for (const auto& p : parts) {
    if (p.cols() != cols) throw ShapeError("vstack: column count mismatch");
    rows += p.rows();
  }
  Matrix m(f, rows, cols);
  std::size_t off = 0;
  for (const auto& p : parts) {
    for (std::size_t r = 0; r < p.rows(); ++r) {
      for (std::size_t c = 0; c < cols; ++c) m(off + r, c) = p(r, c);
    }
    off += p.rows();
  }
  return m;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
  os << "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << m(r, c);
    os << "]";
  }
  return os << "]";
}

Matrix linear_combination(const Field& f, std::size_t rows, std::size_t cols, const Vector& coeffs,
                          const std::vector<Matrix>& mats) {
  if (coeffs.size() != mats.size()) throw ShapeError("linear_combination: coefficient count mismatch");
  Matrix r(f, rows, cols);
  for (std::size_t i = 0; i < mats.size(); ++i) {
    if (coeffs[i].is_zero()) continue;
    const Matrix& m = mats[i];
    if (m.rows() != rows || m.cols() != cols) throw ShapeError("linear_combination: shape mismatch");
    for (std::size_t k = 0; k < r.data().size(); ++k) r.data()[k].add_mul(coeffs[i], m.data()[k]);
  }
  return r;
}

}  // namespace coringlab
