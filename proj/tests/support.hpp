#pragma once

#include <random>

#include "coringlab/linalg.hpp"

namespace coringlab::testing {

inline Scalar random_scalar(const Field& f, std::mt19937_64& rng, int spread = 5) {
  std::uniform_int_distribution<int> d(-spread, spread);
  return Scalar::from_int(f, d(rng));
}

/// Entries in [-spread, spread], about `zero_percent` of them zero.
inline Matrix random_matrix(const Field& f, std::size_t r, std::size_t c, std::mt19937_64& rng, int spread = 5,
                            int zero_percent = 30) {
  std::uniform_int_distribution<int> pct(0, 99);
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) {
      if (pct(rng) >= zero_percent) m(i, j) = random_scalar(f, rng, spread);
    }
  }
  return m;
}

/// Random matrix of rank at most k, built as a product of thin factors.
inline Matrix random_low_rank(const Field& f, std::size_t r, std::size_t c, std::size_t k, std::mt19937_64& rng) {
  return random_matrix(f, r, k, rng, 3, 20) * random_matrix(f, k, c, rng, 3, 20);
}

inline Matrix random_invertible(const Field& f, std::size_t n, std::mt19937_64& rng) {
  while (true) {
    Matrix m = random_matrix(f, n, n, rng, 3, 20);
    if (!determinant(m).is_zero()) return m;
  }
}

}  // namespace coringlab::testing
