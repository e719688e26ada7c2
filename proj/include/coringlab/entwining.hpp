#pragma once

#include <cstddef>
#include <vector>

#include "coringlab/coalgebra.hpp"
#include "coringlab/coring.hpp"

namespace coringlab {

/// psi : C (x) A -> A (x) C as a (dim A * dim C) square matrix. Domain index
/// c * dim A + a, codomain index a * dim C + c.
struct EntwiningData {
  AlgebraPtr algebra;
  Coalgebra coalgebra;
  Matrix psi;
  Vector unit_coaction;  // rho_A(1) in A (x) C, index a * dim C + c
};

/// Psi_a : C -> A (x) C, c -> psi(c (x) e_a).
Matrix entwine_column(const Matrix& psi, std::size_t dim_a, std::size_t dim_c, std::size_t a);

Verdict verify_entwining(const AlgebraPtr& a, const Coalgebra& c, const Matrix& psi);

/// The coring A (x) C with (a' (x) c) a = sum a' a_psi (x) c^psi.
Coring build_coring(const AlgebraPtr& a, const Coalgebra& c, const Matrix& psi);

/// Hom(C, A) with (f.g)(c) = sum f(c2)_psi g(c1^psi); basis E_{a,c} at a * dim C + c.
Algebra build_sharp_ring(const AlgebraPtr& a, const Coalgebra& c, const Matrix& psi);

/// The flip C (x) A -> A (x) C.
Matrix flip_entwining(std::size_t dim_a, std::size_t dim_c, const Field& f);

/// Bialgebra structure on H given as an algebra and a coalgebra on one space.
Verdict verify_bialgebra(const Algebra& h, const Coalgebra& hc);
/// Right H-comodule algebra: coaction is (dim A * dim H) x dim A.
Verdict verify_comodule_algebra(const Algebra& a, const Algebra& h, const Coalgebra& hc, const Matrix& coaction);

struct DoiKoppinenResult {
  Verdict verdict;
  Matrix psi;  // c (x) a -> sum a<0> (x) c a<1>
};
DoiKoppinenResult doi_koppinen(const AlgebraPtr& a, const Algebra& h, const Coalgebra& hc, const Matrix& coaction);

/// Everything derived from a verified entwining. Elements of the dual ring are
/// n x m matrices f : C -> A; their coordinates are the row-major vec.
struct Context {
  AlgebraPtr algebra;
  Coalgebra coalgebra;
  Matrix psi;
  std::size_t n = 0;  // dim A
  std::size_t m = 0;  // dim C
  std::size_t d = 0;  // dim of the coring
  std::vector<Matrix> psi_a;
  Coring coring;
  AlgebraPtr sharp;
  DualRing dual;  // the same ring realised as left A-linear maps on the coring
  Vector x;       // the group-like element rho_A(1)

  const Field& field() const { return algebra->field(); }
  /// f -> [a (x) c -> a f(c)].
  Matrix to_dual_map(const Matrix& f) const;
  /// c -> eps(c) a.
  Matrix iota(const Vector& a) const;
  Vector sharp_vec(const Matrix& f) const { return vec(f); }
  Matrix sharp_map(const Vector& v) const { return unvec(field(), n, m, v); }
  /// f(y) for y in the coring, i.e. sum y[a,c] e_a f(e_c).
  Vector evaluate(const Matrix& f, const Vector& y) const;
  Matrix multiply(const Matrix& f, const Matrix& g) const;
};

/// Requires a verified entwining; throws ShapeError if the dual ring does not close.
Context make_context(const EntwiningData& e);

/// The identification of the #-ring with the dual ring is a ring isomorphism
/// and its image is exactly the left A-linear maps.
Verdict verify_sharp_iso(const Context& ctx);

/// Returns y with unit_coaction = 1 (x) y when there is one.
std::optional<Vector> unit_coaction_factor(const Context& ctx);

}  // namespace coringlab
