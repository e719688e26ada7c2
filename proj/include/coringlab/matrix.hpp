#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <stdexcept>
#include <vector>

#include "coringlab/scalar.hpp"

namespace coringlab {

using Vector = std::vector<Scalar>;

class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Vector zero_vector(const Field& f, std::size_t n);
Vector unit_vector(const Field& f, std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
Vector add(const Vector& a, const Vector& b);
Vector subtract(const Vector& a, const Vector& b);
Vector scaled(const Vector& v, const Scalar& s);
/// a += s * b
void axpy(Vector& a, const Scalar& s, const Vector& b);

/// Dense row-major matrix over a fixed field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(const Field& f, std::size_t rows, std::size_t cols);

  static Matrix identity(const Field& f, std::size_t n);
  static Matrix from_ints(const Field& f, std::initializer_list<std::initializer_list<std::int64_t>> rows);
  static Matrix from_rows(const Field& f, std::size_t cols, const std::vector<Vector>& rows);
  static Matrix from_columns(const Field& f, std::size_t rows, const std::vector<Vector>& cols);
  static Matrix column(const Field& f, const Vector& v);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector col(std::size_t c) const;
  void set_row(std::size_t r, const Vector& v);
  void set_col(std::size_t c, const Vector& v);

  Matrix transpose() const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  Matrix select_columns(const std::vector<std::size_t>& idx) const;
  bool is_zero() const;
  bool is_identity() const;

  Matrix& operator+=(const Matrix& rhs);
  Matrix& operator-=(const Matrix& rhs);
  Matrix& operator*=(const Scalar& s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
  friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& v);
  friend bool operator==(const Matrix& a, const Matrix& b);

  /// Horizontal / vertical concatenation; all parts share the field.
  static Matrix hstack(const Field& f, std::size_t rows, const std::vector<Matrix>& parts);
  static Matrix vstack(const Field& f, std::size_t cols, const std::vector<Matrix>& parts);

  std::vector<Scalar>& data() { return data_; }
  const std::vector<Scalar>& data() const { return data_; }

 private:
  Field field_{};
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);

/// Linear combination sum_i coeffs[i] * mats[i]; mats must be non-empty or
/// the shape given explicitly.
Matrix linear_combination(const Field& f, std::size_t rows, std::size_t cols, const Vector& coeffs,
                          const std::vector<Matrix>& mats);

}  // namespace coringlab
