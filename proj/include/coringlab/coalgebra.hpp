#pragma once

#include <cstddef>
#include <optional>

#include "coringlab/algebra.hpp"

namespace coringlab {

/// Finite-dimensional coalgebra: column c of `comult` is Delta(e_c) with
/// index j * dim + k for e_j (x) e_k; `counit` holds eps(e_c).
class Coalgebra {
 public:
  Coalgebra() = default;
  Coalgebra(const Field& f, std::size_t dim, Matrix comult, Vector counit);

  /// The coalgebra k with Delta(1) = 1 (x) 1.
  static Coalgebra ground(const Field& f);

  const Field& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const Matrix& comult() const { return comult_; }
  const Vector& counit() const { return counit_; }
  const Scalar& delta(std::size_t c, std::size_t j, std::size_t k) const { return comult_(j * dim_ + k, c); }
  /// 1 x dim matrix of the counit.
  Matrix counit_row() const { return Matrix::from_rows(field_, dim_, {counit_}); }

 private:
  Field field_{};
  std::size_t dim_ = 0;
  Matrix comult_;
  Vector counit_;
};

Verdict verify_coalgebra(const Coalgebra& c);

/// (f * g)(c) = sum f(c1) g(c2) for dim A x dim C matrices.
Matrix convolution(const Matrix& f, const Matrix& g, const Algebra& a, const Coalgebra& c);
/// eta o eps.
Matrix convolution_unit(const Algebra& a, const Coalgebra& c);
/// Matrix of h -> f * h on row-major vec(h).
Matrix left_convolution_operator(const Matrix& f, const Algebra& a, const Coalgebra& c);
/// Matrix of h -> h * f on row-major vec(h).
Matrix right_convolution_operator(const Matrix& f, const Algebra& a, const Coalgebra& c);
/// Two-sided inverse, solved as one stacked linear system.
std::optional<Matrix> convolution_inverse(const Matrix& f, const Algebra& a, const Coalgebra& c);

bool is_grouplike(const Coalgebra& c, const Vector& x);

}  // namespace coringlab
