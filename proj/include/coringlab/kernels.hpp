#pragma once

#include <cstddef>
#include <vector>

#include "coringlab/matrix.hpp"

namespace coringlab::kernels {

/// Reduced row echelon form: `reduced` holds only the nonzero rows, with a
/// leading 1 at `pivots[k]` in row k and zeros above and below it.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

// Serial reference implementations. Kept as the oracle for the OpenMP
// kernels and as the baseline in the benchmark.
namespace serial {
Matrix multiply(const Matrix& a, const Matrix& b);
Echelon rref(Matrix m);
/// Fraction-free Gauss-Jordan over Q (Bareiss update rule); rows are cleared
/// of denominators first and the result is rescaled at the end.
Echelon rref_fraction_free(Matrix m);
Scalar determinant(Matrix m);
}  // namespace serial

// OpenMP kernels: the row-update loops run in parallel once the matrix is
// large enough to amortise the fork.
namespace parallel {
Matrix multiply(const Matrix& a, const Matrix& b);
Echelon rref(Matrix m);
Echelon rref_fraction_free(Matrix m);
Scalar determinant(Matrix m);
}  // namespace parallel

/// Work threshold (rows * cols) above which the parallel kernels fork.
inline constexpr std::size_t kParallelThreshold = 4096;

}  // namespace coringlab::kernels
