#pragma once

#include <optional>
#include <vector>

#include "coringlab/clauses.hpp"
#include "coringlab/comodule.hpp"

namespace coringlab {

/// B = A^{coC} with its inclusion into A (dim A x dim B).
struct CoinvariantSubring {
  AlgebraPtr ring;
  Matrix embedding;
  Subspace space;
  Verdict verdict;  // closure under multiplication
};
CoinvariantSubring compute_B(const Context& ctx);

/// Q as a subspace of the #-ring (coordinates = row-major vec of n x m maps).
Subspace compute_Q(const Context& ctx);

/// The Morita context (B, *C, A, Q, F, G) with every structure realised on
/// explicit bases.
struct MoritaContext {
  CoinvariantSubring b;
  Subspace q;
  std::vector<Matrix> q_maps;  // basis of Q as n x m maps

  Module q_right_b;     // Q_B: q -> q b
  Module q_left_dual;   // *C Q: q -> g q
  Module a_left_b;      // B A
  Module a_right_dual;  // A *C: a -> a <- g
  Comodule a_comodule;

  TensorProduct qa;  // Q (x)_B A
  TensorProduct aq;  // A (x)_*C Q
  Matrix f;          // qa -> #-ring coordinates
  Matrix g;          // aq -> B coordinates
  Verdict verdict;   // well-definedness, bilinearity, associativity

  Vector q_element(const Vector& coords) const;
  Matrix q_map(const Vector& coords) const;
};

MoritaContext build_context(const Context& ctx);

/// q in Q with q(x) = 1, as an n x m map.
std::optional<Matrix> find_qhat(const Context& ctx, const MoritaContext& mc);

struct XiResult {
  MapVerdict map;   // M (x)_*C Q -> M^x
  bool lands = true;  // image inside M^x
  std::size_t target_dim = 0;
  bool bijective() const { return lands && map.injective && map.rank == target_dim; }
};
XiResult xi_M(const Context& ctx, const MoritaContext& mc, const Module& dual_module);

struct TraceResult {
  Matrix map;  // A -> B coordinates
  bool left_b_linear = false;
  bool identity_on_b = false;
};
TraceResult trace_map(const Context& ctx, const MoritaContext& mc, const Matrix& qhat);

struct OmegaLambda {
  MapVerdict omega;   // A -> Hom_{-B}(Q, B)
  std::size_t omega_target = 0;
  bool omega_lands = true;
  MapVerdict lambda;  // *C -> End(B A)^op
  std::size_t lambda_target = 0;
  bool lambda_lands = true;
  bool lambda_multiplicative = false;
  bool omega_iso() const { return omega_lands && omega.injective && omega.rank == omega_target; }
  bool lambda_iso() const { return lambda_lands && lambda.injective && lambda.rank == lambda_target; }
};
OmegaLambda omega_and_lambda(const Context& ctx, const MoritaContext& mc);

ClauseTable check_theorem_surj(const Context& ctx, const MoritaContext& mc, const std::vector<Comodule>& witnesses);
ClauseTable check_theorem_Cfinite(const Context& ctx, const MoritaContext& mc, const std::vector<Comodule>& witnesses);

/// m -> sum m q_i (x)_B a_i for a preimage sum q_i (x) a_i of eps under F;
/// checks that it is a two-sided inverse of Psi_M. Empty when F misses eps.
std::optional<Verdict> psi_tilde_from_F(const Context& ctx, const MoritaContext& mc, const Comodule& m);

}  // namespace coringlab
