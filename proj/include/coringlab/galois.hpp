#pragma once

#include <string>
#include <vector>

#include "coringlab/morita.hpp"

namespace coringlab {

/// Psi_M : M^{coC} (x)_B A -> M, m (x) a -> m a.
struct PsiResult {
  Subspace coinv;
  Module coinv_b;
  TensorProduct t;
  Matrix map;
  bool well_defined = false;
  MapVerdict verdict;
  bool bijective() const { return verdict.bijective(); }
};
PsiResult psi_M(const Context& ctx, const CoinvariantSubring& b, const Comodule& m);

/// Phi_N : N -> (N (x)_B A)^{coC}, n -> n (x) 1.
struct PhiResult {
  TensorProduct t;
  Comodule induced;
  Subspace coinv;
  Matrix map;  // into tensor coordinates
  bool injective = false;
  bool lands = false;
  bool onto = false;
  bool bijective() const { return injective && lands && onto; }
};
PhiResult phi_N(const Context& ctx, const CoinvariantSubring& b, const Module& n);

/// beta : A (x)_B A -> C, a' (x) a -> a' x a.
struct BetaResult {
  TensorProduct t;
  Matrix map;
  MapVerdict verdict;
  bool coring_morphism = false;
  bool bijective() const { return verdict.bijective(); }
};
BetaResult beta(const Context& ctx, const CoinvariantSubring& b);

/// beta_W : W (x)_B A -> W (x)_A C = W (x) C, w (x) a -> w (x) x a.
struct BetaWResult {
  TensorProduct t;
  Matrix map;
  bool well_defined = false;
  MapVerdict verdict;
};
BetaWResult beta_W(const Context& ctx, const CoinvariantSubring& b, const Module& w);

/// Psi'_M : Hom^C(A, M) (x)_B A -> M, f (x) a -> f(a).
struct PsiPrimeResult {
  Subspace hom;
  TensorProduct t;
  Matrix map;
  MapVerdict verdict;
  bool omega_bijective = false;  // f -> f(1) onto M^{coC}
  bool bijective() const { return verdict.bijective(); }
};
PsiPrimeResult psi_prime_M(const Context& ctx, const CoinvariantSubring& b, const Comodule& m);

/// varpi_M : M (x)_*C *C -> M, m (x) f -> m f.
struct VarpiResult {
  bool surjective = false;
  bool ghat_exists = false;
};
VarpiResult varpi_M(const Context& ctx, const Module& dual_module);

struct WitnessRecord {
  std::string name;
  std::size_t dim = 0;
  bool psi = false;
  bool psi_prime = false;
  bool xi = false;
  bool coinvariants_match = false;  // M^{coC} = M^x
  friend bool operator==(const WitnessRecord&, const WitnessRecord&) = default;
};

struct StructureVerdict {
  bool weak = false;
  bool strong = false;
  bool galois = false;
  bool flat = false;
  bool faithfully_flat = false;
  bool phi_witnesses = false;
  std::vector<WitnessRecord> witnesses;
  ClauseTable fin_gen;
  ClauseTable fin_prog;
  /// One-directional checks that failed; empty when all hold.
  std::vector<std::string> implication_failures;
};
StructureVerdict structure_report(const Context& ctx, const MoritaContext& mc, const std::vector<Comodule>& witnesses);

/// Right B-modules N used for Phi_N: B, B^2 and A.
std::vector<Module> b_module_witnesses(const Context& ctx, const CoinvariantSubring& b);

}  // namespace coringlab
