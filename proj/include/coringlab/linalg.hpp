#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "coringlab/kernels.hpp"
#include "coringlab/matrix.hpp"

namespace coringlab {

/// Reduced row echelon form of `m` (nonzero rows only), computed with the
/// default elimination kernel for the field.
kernels::Echelon echelon(const Matrix& m);

/// A subspace of k^n, stored as its unique reduced row echelon basis.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(const Field& f, std::size_t ambient_dim);
  static Subspace full(const Field& f, std::size_t ambient_dim);
  static Subspace span(const Field& f, std::size_t ambient_dim, const std::vector<Vector>& vectors);
  /// Row space of `rows`.
  static Subspace row_space(const Matrix& rows);

  const Field& field() const { return basis_.field(); }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return pivots_.size(); }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_; }

  /// Rows are the canonical basis vectors.
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Vector vector(std::size_t i) const { return basis_.row(i); }
  std::vector<Vector> vectors() const;
  /// ambient_dim x dim matrix whose columns are the basis vectors.
  Matrix basis_columns() const { return basis_.transpose(); }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates with respect to the canonical basis, or nullopt if v is not
  /// a member.
  std::optional<Vector> coordinates(const Vector& v) const;
  /// Element with the given coordinates.
  Vector combine(const Vector& coords) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  Subspace(std::size_t ambient, kernels::Echelon e);

  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// k^n / relations, with an explicit projection onto quotient coordinates and
/// a section choosing representatives.
struct QuotientSpace {
  std::size_t ambient_dim = 0;
  Subspace relations;
  Matrix projection;  // dim x ambient_dim
  Matrix section;     // ambient_dim x dim

  std::size_t dim() const { return projection.rows(); }
  Vector project(const Vector& v) const { return projection * v; }
  Vector lift(const Vector& q) const { return section * q; }
};

Subspace kernel(const Matrix& m);
Subspace image(const Matrix& m);
std::size_t rank(const Matrix& m);

/// One solution of m v = b with free variables set to zero, or nullopt.
std::optional<Vector> solve(const Matrix& m, const Vector& b);
/// Solves m X = b column-wise; nullopt if any column is inconsistent.
std::optional<Matrix> solve(const Matrix& m, const Matrix& b);

Scalar determinant(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);

/// Kronecker product: entry ((iM, iN), (jM, jN)) sits at row iM*rows(N)+iN
/// and column jM*cols(N)+jN.
Matrix kron(const Matrix& a, const Matrix& b);
/// (a kron b) v, without materialising the Kronecker product.
Vector kron_apply(const Matrix& a, const Matrix& b, const Vector& v);

QuotientSpace quotient(std::size_t ambient_dim, const Subspace& relations);

/// Flags describing a linear map between finite-dimensional spaces.
struct MapVerdict {
  bool injective = false;
  bool surjective = false;
  std::size_t rank = 0;
  bool bijective() const { return injective && surjective; }
};
MapVerdict classify(const Matrix& m);

}  // namespace coringlab
