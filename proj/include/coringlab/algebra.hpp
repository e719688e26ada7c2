#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "coringlab/linalg.hpp"

namespace coringlab {

/// Outcome of an axiom check: the list of violated identities, empty when
/// everything holds.
struct Verdict {
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
  void fail(std::string what) { failures.push_back(std::move(what)); }
  void merge(const Verdict& other, const std::string& prefix = {});
};

/// Finite-dimensional unital algebra given by structure constants:
/// e_i e_j = sum_k mult[i][j][k] e_k.
class Algebra {
 public:
  Algebra() = default;
  /// `products[i * dim + j]` is the coordinate vector of e_i e_j.
  Algebra(const Field& f, std::size_t dim, std::vector<Vector> products, Vector unit);

  static Algebra ground(const Field& f);

  const Field& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const Vector& unit() const { return unit_; }
  const Vector& product(std::size_t i, std::size_t j) const { return products_[i * dim_ + j]; }

  /// x -> e_i x and x -> x e_i.
  const Matrix& left(std::size_t i) const { return left_[i]; }
  const Matrix& right(std::size_t i) const { return right_[i]; }
  Matrix left_mult(const Vector& a) const;
  Matrix right_mult(const Vector& a) const;
  Vector multiply(const Vector& a, const Vector& b) const;

  Vector basis_vector(std::size_t i) const { return unit_vector(field_, dim_, i); }

  /// Structure constants with the order of multiplication reversed.
  Algebra opposite() const;

  friend bool operator==(const Algebra& a, const Algebra& b) {
    return a.dim_ == b.dim_ && a.products_ == b.products_ && a.unit_ == b.unit_;
  }

 private:
  Field field_{};
  std::size_t dim_ = 0;
  std::vector<Vector> products_;
  Vector unit_;
  std::vector<Matrix> left_;
  std::vector<Matrix> right_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

Verdict verify_algebra(const Algebra& a);

/// Subalgebra spanned by the given vectors, with structure constants in the
/// coordinates of `basis` (must be closed under multiplication and contain 1).
std::optional<Algebra> induced_subalgebra(const Algebra& a, const Subspace& basis);

/// A small set of elements generating `a` as a unital algebra; chosen greedily
/// among the basis vectors.
std::vector<Vector> algebra_generators(const Algebra& a);

enum class Side { Left, Right };

/// Module over an algebra: action[i] is the matrix of m -> e_i m (left) or
/// m -> m e_i (right).
struct Module {
  AlgebraPtr algebra;
  Side side = Side::Right;
  std::size_t dim = 0;
  std::vector<Matrix> action;

  const Field& field() const { return algebra->field(); }
  /// Action of an arbitrary algebra element.
  Matrix act(const Vector& s) const;
};

Verdict verify_module(const Module& m);

Module regular_module(AlgebraPtr a, Side side);
/// S^r with the regular action on each summand.
Module free_module(AlgebraPtr a, Side side, std::size_t rank);
Module direct_sum(const Module& m, const Module& n);
/// Restriction to an invariant subspace, in the coordinates of its basis.
Module submodule(const Module& m, const Subspace& sub);
/// Pulls the action back along an algebra map given by its matrix (dim S x dim T).
Module restrict_scalars(const Module& m, AlgebraPtr t, const Matrix& embedding);

/// Smallest submodule containing the given vectors.
Subspace generated_submodule(const Module& m, const std::vector<Vector>& vectors);
/// Greedy generating set chosen among the basis vectors.
std::vector<Vector> module_generators(const Module& m);
/// The map S^r -> M, (s_j) -> sum_j s_j g_j (or g_j s_j); column j*dim S + i
/// is e_i acting on g_j.
Matrix generator_map(const Module& m, const std::vector<Vector>& gens);

/// M (x)_S N as a quotient of M (x)_k N (index m * dim N + n).
struct TensorProduct {
  std::size_t left_dim = 0;
  std::size_t right_dim = 0;
  Matrix projection;  // dim x (left_dim * right_dim)
  Matrix section;     // (left_dim * right_dim) x dim

  std::size_t dim() const { return projection.rows(); }
  Vector project(const Vector& v) const { return projection * v; }
  Vector lift(const Vector& q) const { return section * q; }
  Vector pure(const Vector& m, const Vector& n) const;
  /// Kernel of the projection, i.e. the span of the balancing relations.
  Subspace relations() const { return kernel(projection); }
  QuotientSpace as_quotient() const;
};

/// M right S-module, N left S-module. N is presented as S^r / K from a
/// generating set, so the work scales with dim M * r rather than dim M * dim N.
TensorProduct balanced_tensor(const Module& m, const Module& n);
/// Reference implementation: quotient by ms (x) n - m (x) sn over all basis
/// triples. Used as a test oracle.
TensorProduct balanced_tensor_naive(const Module& m, const Module& n);

/// A map on the plain tensor product that kills the balancing relations,
/// restricted to the balanced quotient.
Matrix descend(const TensorProduct& t, const Matrix& plain);
/// Whether `plain` vanishes on the balancing relations.
bool descends(const TensorProduct& t, const Matrix& plain);

/// The map f (x) g between balanced tensor products.
Matrix tensor_maps(const TensorProduct& from, const TensorProduct& to, const Matrix& f, const Matrix& g);

/// Right module structure on M (x)_S N induced by a right action on N that
/// commutes with the S-action (one matrix per basis element of the acting algebra).
Module tensor_right_module(const TensorProduct& t, AlgebraPtr acting, const std::vector<Matrix>& right_on_n);
/// Left module structure induced by a left action on M.
Module tensor_left_module(const TensorProduct& t, AlgebraPtr acting, const std::vector<Matrix>& left_on_m);

/// Row-major vec of a rows x cols matrix and back.
Vector vec(const Matrix& m);
Matrix unvec(const Field& f, std::size_t rows, std::size_t cols, const Vector& v);

/// All S-linear maps M -> N as a subspace of vec(dim N x dim M matrices).
Subspace hom_module(const Module& m, const Module& n);
std::vector<Matrix> hom_basis(const Module& m, const Module& n);

struct ProjectivityResult {
  bool projective = false;
  std::size_t generators = 0;
  std::optional<Matrix> splitting;  // M -> S^r, a right inverse of the generator map
};
ProjectivityResult is_fg_projective(const Module& m);

/// Trace ideal of M in S equals S.
bool is_generator(const Module& m);
/// Subspace of S acting as zero.
Subspace annihilator(const Module& m);
bool is_faithful(const Module& m);

}  // namespace coringlab
