#include "coringlab/kernels.hpp"

#include <gmpxx.h>

#include <string>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace coringlab::kernels {

namespace {

template <bool Par>
Matrix multiply_impl(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw ShapeError("matrix product shape mismatch: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                     " * " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  const std::size_t n = a.rows();
  const std::size_t inner = a.cols();
  const std::size_t m = b.cols();
  Matrix c(a.field(), n, m);
  [[maybe_unused]] const bool fork = Par && n * inner * m > kParallelThreshold * 8;
#pragma omp parallel for schedule(dynamic, 4) if (fork)
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < inner; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j) {
        const Scalar& bkj = b(k, j);
        if (bkj.is_zero()) continue;
        c(i, j).add_mul(aik, bkj);
      }
    }
  }
  return c;
}

void swap_rows(Matrix& m, std::size_t r1, std::size_t r2) {
  if (r1 == r2) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(r1, c), m(r2, c));
}

Echelon finish(Matrix&& m, std::vector<std::size_t>&& pivots) {
  Echelon e;
  e.reduced = m.block(0, 0, pivots.size(), m.cols());
  e.pivots = std::move(pivots);
  return e;
}

template <bool Par>
Echelon rref_impl(Matrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t k = 0;
  std::vector<std::size_t> nz;
  for (std::size_t col = 0; col < cols && k < rows; ++col) {
    std::size_t piv = rows;
    for (std::size_t r = k; r < rows; ++r) {
      if (!m(r, col).is_zero()) {
        piv = r;
        if (m(r, col).is_one()) break;
      }
    }
    if (piv == rows) continue;
    swap_rows(m, piv, k);
    if (!m(k, col).is_one()) {
      Scalar inv = m(k, col).inverse();
      for (std::size_t j = col; j < cols; ++j) {
        if (!m(k, j).is_zero()) m(k, j) *= inv;
      }
    }
    nz.clear();
    for (std::size_t j = col; j < cols; ++j) {
      if (!m(k, j).is_zero()) nz.push_back(j);
    }
    [[maybe_unused]] const bool fork = Par && rows * nz.size() > kParallelThreshold;
#pragma omp parallel for schedule(static) if (fork)
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == k || m(i, col).is_zero()) continue;
      Scalar f = m(i, col);
      for (std::size_t j : nz) m(i, j).sub_mul(f, m(k, j));
    }
    pivots.push_back(col);
    ++k;
  }
  return finish(std::move(m), std::move(pivots));
}

void clear_denominators(Matrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!m(r, c).is_integer()) l = lcm(l, m(r, c).to_mpq().get_den());
    }
    if (l != 1) {
      Scalar s = Scalar::from_mpq(mpq_class(l));
      for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) *= s;
    }
  }
}

template <bool Par>
Echelon rref_fraction_free_impl(Matrix m) {
  if (!m.field().is_rationals()) return rref_impl<Par>(std::move(m));
  clear_denominators(m);
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  const Field f = m.field();
  Scalar prev = Scalar::one(f);
  std::vector<std::size_t> pivots;
  std::size_t k = 0;
  for (std::size_t col = 0; col < cols && k < rows; ++col) {
    std::size_t piv = rows;
    for (std::size_t r = k; r < rows; ++r) {
      if (!m(r, col).is_zero()) {
        piv = r;
        break;
      }
    }
    if (piv == rows) continue;
    swap_rows(m, piv, k);
    const Scalar p = m(k, col);
    const bool trivial_prev = prev.is_one();
    [[maybe_unused]] const bool fork = Par && rows * cols > kParallelThreshold;
#pragma omp parallel for schedule(static) if (fork)
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == k) continue;
      const Scalar factor = m(i, col);
      for (std::size_t j = 0; j < cols; ++j) {
        Scalar& x = m(i, j);
        const Scalar& y = m(k, j);
        if (x.is_zero() && (factor.is_zero() || y.is_zero())) continue;
        x *= p;
        x.sub_mul(factor, y);
        if (!trivial_prev) x /= prev;
      }
    }
    prev = p;
    pivots.push_back(col);
    ++k;
  }
  if (!prev.is_one()) {
    Scalar inv = prev.inverse();
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t c = 0; c < cols; ++c) {
        if (!m(r, c).is_zero()) m(r, c) *= inv;
      }
    }
  }
  return finish(std::move(m), std::move(pivots));
}

template <bool Par>
Scalar determinant_impl(Matrix m) {
  if (m.rows() != m.cols()) throw ShapeError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  const Field f = m.field();
  if (n == 0) return Scalar::one(f);
  bool negate = false;
  if (!f.is_rationals()) {
    Scalar det = Scalar::one(f);
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t piv = n;
      for (std::size_t r = k; r < n; ++r) {
        if (!m(r, k).is_zero()) {
          piv = r;
          break;
        }
      }
      if (piv == n) return Scalar::zero(f);
      if (piv != k) {
        swap_rows(m, piv, k);
        negate = !negate;
      }
      det *= m(k, k);
      Scalar inv = m(k, k).inverse();
      [[maybe_unused]] const bool fork = Par && n * n > kParallelThreshold;
#pragma omp parallel for schedule(static) if (fork)
      for (std::size_t i = k + 1; i < n; ++i) {
        if (m(i, k).is_zero()) continue;
        Scalar factor = m(i, k) * inv;
        for (std::size_t j = k; j < n; ++j) m(i, j).sub_mul(factor, m(k, j));
      }
    }
    return negate ? -det : det;
  }
  // Bareiss: every intermediate entry is a minor of the input, and the
  // division by the previous pivot is exact.
  Scalar prev = Scalar::one(f);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t piv = n;
    for (std::size_t r = k; r < n; ++r) {
      if (!m(r, k).is_zero()) {
        piv = r;
        break;
      }
    }
    if (piv == n) return Scalar::zero(f);
    if (piv != k) {
      swap_rows(m, piv, k);
      negate = !negate;
    }
    const Scalar p = m(k, k);
    [[maybe_unused]] const bool fork = Par && n * n > kParallelThreshold;
#pragma omp parallel for schedule(static) if (fork)
    for (std::size_t i = k + 1; i < n; ++i) {
      const Scalar factor = m(i, k);
      for (std::size_t j = k + 1; j < n; ++j) {
        Scalar& x = m(i, j);
        x *= p;
        x.sub_mul(factor, m(k, j));
        x /= prev;
      }
    }
    prev = p;
  }
  Scalar det = m(n - 1, n - 1);
  return negate ? -det : det;
}

}  // namespace

namespace serial {
Matrix multiply(const Matrix& a, const Matrix& b) { return multiply_impl<false>(a, b); }
Echelon rref(Matrix m) { return rref_impl<false>(std::move(m)); }
Echelon rref_fraction_free(Matrix m) { return rref_fraction_free_impl<false>(std::move(m)); }
Scalar determinant(Matrix m) { return determinant_impl<false>(std::move(m)); }
}  // namespace serial

namespace parallel {
Matrix multiply(const Matrix& a, const Matrix& b) { return multiply_impl<true>(a, b); }
Echelon rref(Matrix m) { return rref_impl<true>(std::move(m)); }
Echelon rref_fraction_free(Matrix m) { return rref_fraction_free_impl<true>(std::move(m)); }
Scalar determinant(Matrix m) { return determinant_impl<true>(std::move(m)); }
}  // namespace parallel

}  // namespace coringlab::kernels
