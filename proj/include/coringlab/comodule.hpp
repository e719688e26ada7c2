#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "coringlab/entwining.hpp"

namespace coringlab {

/// Right entwined module: right A-action per basis element of A and a
/// C-coaction M -> M (x) C (index v * dim C + c).
struct Comodule {
  std::string name;
  std::size_t dim = 0;
  std::vector<Matrix> action;
  Matrix coaction;

  Matrix act(const Vector& a) const;
  /// m -> m_<0> with the coefficient of e_c in m_<1>.
  Matrix select(std::size_t c, std::size_t dim_c) const;
};

Verdict verify_comodule(const Context& ctx, const Comodule& m);

Comodule zero_comodule(const Context& ctx);
/// A with rho(a) = x a.
Comodule algebra_comodule(const Context& ctx);
/// The coring itself, a (x) c -> sum (a (x) c1) (x) c2.
Comodule coring_comodule(const Context& ctx);
/// W (x)_A C identified with W (x) C.
Comodule induced_comodule(const Context& ctx, const Module& w);
/// The dual ring, rational over itself.
Comodule dual_comodule(const Context& ctx);
Comodule direct_sum(const Comodule& a, const Comodule& b);
/// Restriction to a subspace closed under action and coaction.
Comodule subcomodule(const Context& ctx, const Comodule& m, const Subspace& sub);

/// Module over the A-algebra restricted to the right A-action.
Module right_a_module(const Context& ctx, const Comodule& m);
/// m g = sum m_<0> g(m_<1>), as a right module over the #-ring.
Matrix dual_action_of(const Context& ctx, const Comodule& m, const Matrix& g);
Module dual_action(const Context& ctx, const Comodule& m);

/// M^{coC} = { m : rho(m) = m x }.
Subspace coinvariants(const Context& ctx, const Comodule& m);
/// M^x = { m : m g = m g(x) for all g }.
Subspace x_invariants(const Context& ctx, const Module& dual_module);

/// Linear conditions on row-major vec(f), f : M -> N (dim N x dim M), for
/// rho_N f = (f (x) id) rho_M.
Matrix colinearity_conditions(const Matrix& coaction_m, std::size_t dim_m, const Matrix& coaction_n, std::size_t dim_n,
                              std::size_t dim_c);
/// A-linear C-colinear maps M -> N, as a subspace of vec(dim N x dim M).
Subspace hom_comodule(const Context& ctx, const Comodule& m, const Comodule& n);

/// 0, A, C, A+C, A^2 (x)_A C, the dual ring, then `kernels` kernels of
/// seeded random colinear maps into A.
std::vector<Comodule> witness_family(const Context& ctx, std::size_t kernels, std::uint64_t seed);

}  // namespace coringlab
