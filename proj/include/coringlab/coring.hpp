#pragma once

#include <cstddef>
#include <vector>

#include "coringlab/algebra.hpp"

namespace coringlab {

/// An A-coring on a vector space of dimension `dim`, with the comultiplication
/// given by a lift into the plain tensor square (index i * dim + j).
struct Coring {
  AlgebraPtr algebra;
  std::size_t dim = 0;
  std::vector<Matrix> left;   // c -> e_i c
  std::vector<Matrix> right;  // c -> c e_i
  Matrix delta;               // dim^2 x dim
  Matrix counit;              // dim A x dim

  const Field& field() const { return algebra->field(); }
  Module left_module() const;
  Module right_module() const;
  /// x -> c x for a fixed element c, as a dim x dim A matrix.
  Matrix right_orbit(const Vector& c) const;
};

/// The trivial coring A with Delta(a) = a (x) 1 and eps = id.
Coring trivial_coring(AlgebraPtr a);

Verdict verify_coring(const Coring& c);
bool is_grouplike(const Coring& c, const Vector& x);

/// C (x)_A C and (C (x)_A C) (x)_A C, with the right module structure on the
/// square used to build the cube.
struct CoringTensors {
  TensorProduct square;
  Module square_right;
  TensorProduct cube;
};
CoringTensors coring_tensors(const Coring& c);

/// The dual ring *C = Hom_A-(C, A) with (f.g)(c) = sum g(c1 f(c2)) and unit eps.
/// Elements are stored as coordinates with respect to `maps`.
struct DualRing {
  AlgebraPtr ring;
  std::vector<Matrix> maps;  // dim A x dim C, one per basis element
  Subspace span;             // of vec(maps)

  Matrix map(const Vector& coords) const;
  Vector coordinates(const Matrix& f) const;
};

/// Uses a canonical basis of the left A-linear maps.
DualRing dual_ring(const Coring& c);
/// Uses the given basis (must span exactly the left A-linear maps).
DualRing dual_ring(const Coring& c, std::vector<Matrix> basis);

/// Product of two left A-linear maps under the dual-ring multiplication.
Matrix dual_product(const Coring& c, const Matrix& f, const Matrix& g);

}  // namespace coringlab
