#include "coringlab/coalgebra.hpp"

#include <string>

namespace coringlab {

Coalgebra::Coalgebra(const Field& f, std::size_t dim, Matrix comult, Vector counit)
    : field_(f), dim_(dim), comult_(std::move(comult)), counit_(std::move(counit)) {
  if (comult_.rows() != dim_ * dim_ || comult_.cols() != dim_) throw ShapeError("coalgebra: comultiplication shape");
  if (counit_.size() != dim_) throw ShapeError("coalgebra: counit length");
}

Coalgebra Coalgebra::ground(const Field& f) {
  return Coalgebra(f, 1, Matrix::identity(f, 1), Vector{Scalar::one(f)});
}

Verdict verify_coalgebra(const Coalgebra& c) {
  Verdict v;
  const Field& f = c.field();
  const std::size_t m = c.dim();
  Matrix id = Matrix::identity(f, m);
  Matrix lhs = kron(c.comult(), id) * c.comult();
  Matrix rhs = kron(id, c.comult()) * c.comult();
  Matrix left_counit = kron(c.counit_row(), id) * c.comult();
  Matrix right_counit = kron(id, c.counit_row()) * c.comult();
  for (std::size_t i = 0; i < m; ++i) {
    const std::string at = " at e" + std::to_string(i);
    if (lhs.col(i) != rhs.col(i)) v.fail("coassociativity" + at);
    if (left_counit.col(i) != id.col(i)) v.fail("left counit" + at);
    if (right_counit.col(i) != id.col(i)) v.fail("right counit" + at);
  }
  return v;
}

Matrix convolution(const Matrix& f, const Matrix& g, const Algebra& a, const Coalgebra& c) {
  const std::size_t m = c.dim();
  Matrix out(a.field(), a.dim(), m);
  for (std::size_t col = 0; col < m; ++col) {
    Vector acc = zero_vector(a.field(), a.dim());
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t k = 0; k < m; ++k) {
        const Scalar& d = c.delta(col, j, k);
        if (d.is_zero()) continue;
        axpy(acc, d, a.multiply(f.col(j), g.col(k)));
      }
    }
    out.set_col(col, acc);
  }
  return out;
}

Matrix convolution_unit(const Algebra& a, const Coalgebra& c) {
  return Matrix::column(a.field(), a.unit()) * c.counit_row();
}

Matrix left_convolution_operator(const Matrix& f, const Algebra& a, const Coalgebra& c) {
  const std::size_t n = a.dim();
  const std::size_t m = c.dim();
  Matrix op(a.field(), n * m, n * m);
  for (std::size_t col = 0; col < m; ++col) {
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t k = 0; k < m; ++k) {
        const Scalar& d = c.delta(col, j, k);
        if (d.is_zero()) continue;
        // (f * h)(col) += d f(e_j) h(e_k)
        Matrix lf = a.left_mult(f.col(j));
        for (std::size_t r = 0; r < n; ++r) {
          for (std::size_t s = 0; s < n; ++s) {
            if (!lf(r, s).is_zero()) op(r * m + col, s * m + k).add_mul(d, lf(r, s));
          }
        }
      }
    }
  }
  return op;
}

Matrix right_convolution_operator(const Matrix& f, const Algebra& a, const Coalgebra& c) {
  const std::size_t n = a.dim();
  const std::size_t m = c.dim();
  Matrix op(a.field(), n * m, n * m);
  for (std::size_t col = 0; col < m; ++col) {
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t k = 0; k < m; ++k) {
        const Scalar& d = c.delta(col, j, k);
        if (d.is_zero()) continue;
        // (h * f)(col) += d h(e_j) f(e_k)
        Matrix rf = a.right_mult(f.col(k));
        for (std::size_t r = 0; r < n; ++r) {
          for (std::size_t s = 0; s < n; ++s) {
            if (!rf(r, s).is_zero()) op(r * m + col, s * m + j).add_mul(d, rf(r, s));
          }
        }
      }
    }
  }
  return op;
}

std::optional<Matrix> convolution_inverse(const Matrix& f, const Algebra& a, const Coalgebra& c) {
  const std::size_t nm = a.dim() * c.dim();
  Matrix sys = Matrix::vstack(a.field(), nm, {left_convolution_operator(f, a, c), right_convolution_operator(f, a, c)});
  Vector u = vec(convolution_unit(a, c));
  Vector rhs = u;
  rhs.insert(rhs.end(), u.begin(), u.end());
  auto h = solve(sys, rhs);
  if (!h) return std::nullopt;
  return unvec(a.field(), a.dim(), c.dim(), *h);
}

bool is_grouplike(const Coalgebra& c, const Vector& x) {
  if (x.size() != c.dim()) throw ShapeError("is_grouplike: vector length");
  Scalar e = Scalar::zero(c.field());
  for (std::size_t i = 0; i < x.size(); ++i) e.add_mul(c.counit()[i], x[i]);
  if (!e.is_one()) return false;
  return c.comult() * x == kron(Matrix::column(c.field(), x), Matrix::column(c.field(), x)).col(0);
}

}  // namespace coringlab
