#include "coringlab/linalg.hpp"

#include <string>

namespace coringlab {

kernels::Echelon echelon(const Matrix& m) {
  if (m.field().is_rationals()) return kernels::parallel::rref_fraction_free(m);
  return kernels::parallel::rref(m);
}

Subspace::Subspace(std::size_t ambient, kernels::Echelon e)
    : ambient_(ambient), basis_(std::move(e.reduced)), pivots_(std::move(e.pivots)) {}

Subspace Subspace::zero(const Field& f, std::size_t ambient_dim) {
  return Subspace(ambient_dim, kernels::Echelon{Matrix(f, 0, ambient_dim), {}});
}

Subspace Subspace::full(const Field& f, std::size_t ambient_dim) {
  kernels::Echelon e{Matrix::identity(f, ambient_dim), {}};
  for (std::size_t i = 0; i < ambient_dim; ++i) e.pivots.push_back(i);
  return Subspace(ambient_dim, std::move(e));
}

Subspace Subspace::span(const Field& f, std::size_t ambient_dim, const std::vector<Vector>& vectors) {
  for (const auto& v : vectors) {
    if (v.size() != ambient_dim) throw ShapeError("span: vector of wrong length");
  }
  return row_space(Matrix::from_rows(f, ambient_dim, vectors));
}

Subspace Subspace::row_space(const Matrix& rows) { return Subspace(rows.cols(), echelon(rows)); }

std::vector<Vector> Subspace::vectors() const {
  std::vector<Vector> out;
  out.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_.row(i));
  return out;
}

std::optional<Vector> Subspace::coordinates(const Vector& v) const {
  if (v.size() != ambient_) throw ShapeError("coordinates: vector of wrong length");
  Vector coords;
  coords.reserve(dim());
  Vector residual(v);
  for (std::size_t k = 0; k < dim(); ++k) {
    Scalar c = residual[pivots_[k]];
    coords.push_back(c);
    if (c.is_zero()) continue;
    for (std::size_t j = pivots_[k]; j < ambient_; ++j) {
      const Scalar& b = basis_(k, j);
      if (!b.is_zero()) residual[j].sub_mul(c, b);
    }
  }
  if (!coringlab::is_zero(residual)) return std::nullopt;
  return coords;
}

bool Subspace::contains(const Vector& v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) return false;
  for (std::size_t i = 0; i < other.dim(); ++i) {
    if (!contains(other.vector(i))) return false;
  }
  return true;
}

Vector Subspace::combine(const Vector& coords) const {
  if (coords.size() != dim()) throw ShapeError("combine: coordinate count mismatch");
  Vector v = zero_vector(field(), ambient_);
  for (std::size_t k = 0; k < dim(); ++k) {
    if (coords[k].is_zero()) continue;
    for (std::size_t j = 0; j < ambient_; ++j) v[j].add_mul(coords[k], basis_(k, j));
  }
  return v;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw ShapeError("sum of subspaces in different ambient spaces");
  return row_space(Matrix::vstack(field(), ambient_, {basis_, other.basis_}));
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw ShapeError("intersection of subspaces in different ambient spaces");
  if (is_zero() || other.is_zero()) return zero(field(), ambient_);
  // x in both <=> x = a^T s = b^T t; solve [a^T | -b^T] (s,t) = 0.
  Matrix stacked = Matrix::hstack(field(), ambient_, {basis_columns(), -Scalar::one(field()) * other.basis_columns()});
  Subspace ker = kernel(stacked);
  std::vector<Vector> vs;
  for (std::size_t i = 0; i < ker.dim(); ++i) {
    Vector st = ker.vector(i);
    Vector s(st.begin(), st.begin() + static_cast<std::ptrdiff_t>(dim()));
    vs.push_back(combine(s));
  }
  return span(field(), ambient_, vs);
}

Subspace kernel(const Matrix& m) {
  const Field& f = m.field();
  kernels::Echelon e = echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v = unit_vector(f, m.cols(), free);
    for (std::size_t k = 0; k < e.rank(); ++k) v[e.pivots[k]] = -e.reduced(k, free);
    basis.push_back(std::move(v));
  }
  return Subspace::span(f, m.cols(), basis);
}

Subspace image(const Matrix& m) { return Subspace::row_space(m.transpose()); }

std::size_t rank(const Matrix& m) { return echelon(m).rank(); }

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) {
    throw ShapeError("solve: right-hand side has length " + std::to_string(b.size()) + ", expected " +
                     std::to_string(m.rows()));
  }
  auto x = solve(m, Matrix::column(m.field(), b));
  if (!x) return std::nullopt;
  return x->col(0);
}

std::optional<Matrix> solve(const Matrix& m, const Matrix& b) {
  if (b.rows() != m.rows()) throw ShapeError("solve: right-hand side row count mismatch");
  const Field& f = m.field();
  kernels::Echelon e = echelon(Matrix::hstack(f, m.rows(), {m, b}));
  Matrix x(f, m.cols(), b.cols());
  for (std::size_t k = 0; k < e.rank(); ++k) {
    if (e.pivots[k] >= m.cols()) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x(e.pivots[k], j) = e.reduced(k, m.cols() + j);
  }
  return x;
}

Scalar determinant(const Matrix& m) { return kernels::parallel::determinant(m); }

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw ShapeError("inverse of a non-square matrix");
  if (rank(m) != m.rows()) return std::nullopt;
  return solve(m, Matrix::identity(m.field(), m.rows()));
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix k(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Scalar& s = a(i, j);
      if (s.is_zero()) continue;
      for (std::size_t p = 0; p < b.rows(); ++p) {
        for (std::size_t q = 0; q < b.cols(); ++q) {
          if (!b(p, q).is_zero()) k(i * b.rows() + p, j * b.cols() + q) = s * b(p, q);
        }
      }
    }
  }
  return k;
}

Vector kron_apply(const Matrix& a, const Matrix& b, const Vector& v) {
  if (v.size() != a.cols() * b.cols()) throw ShapeError("kron_apply: vector length mismatch");
  const Field& f = a.field();
  // v viewed as a cols(a) x cols(b) matrix Y; result is a * Y * b^T.
  Matrix t(f, a.cols(), b.rows());
  for (std::size_t i = 0; i < a.cols(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      const Scalar& y = v[i * b.cols() + j];
      if (y.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        if (!b(k, j).is_zero()) t(i, k).add_mul(y, b(k, j));
      }
    }
  }
  Matrix r = a * t;
  return std::move(r.data());
}

QuotientSpace quotient(std::size_t ambient_dim, const Subspace& relations) {
  if (relations.ambient_dim() != ambient_dim) throw ShapeError("quotient: relations live in a different space");
  const Field& f = relations.field();
  std::vector<bool> is_pivot(ambient_dim, false);
  for (auto p : relations.pivots()) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < ambient_dim; ++c) {
    if (!is_pivot[c]) free.push_back(c);
  }
  QuotientSpace q;
  q.ambient_dim = ambient_dim;
  q.relations = relations;
  q.projection = Matrix(f, free.size(), ambient_dim);
  q.section = Matrix(f, ambient_dim, free.size());
  for (std::size_t j = 0; j < free.size(); ++j) {
    q.projection(j, free[j]) = Scalar::one(f);
    q.section(free[j], j) = Scalar::one(f);
    for (std::size_t k = 0; k < relations.dim(); ++k) {
      q.projection(j, relations.pivots()[k]) = -relations.basis()(k, free[j]);
    }
  }
  return q;
}

MapVerdict classify(const Matrix& m) {
  MapVerdict v;
  v.rank = rank(m);
  v.injective = v.rank == m.cols();
  v.surjective = v.rank == m.rows();
  return v;
}

}  // namespace coringlab
