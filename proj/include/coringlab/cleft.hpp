#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coringlab/galois.hpp"

namespace coringlab {

enum class Decision { No, Yes, Inconclusive };
const char* to_string(Decision d);

struct SearchOptions {
  std::uint64_t seed = 0;
  std::size_t budget = 8192;  // determinant evaluations for exhaustive or grid certification
  std::size_t zero_one_limit = 256;
  std::size_t random_trials = 64;
};

/// Decides whether offset + sum t_i family[i] is invertible for some t.
struct InvertibleSearch {
  Decision decision = Decision::Inconclusive;
  std::optional<Vector> point;
  std::string certificate;
  std::size_t evaluations = 0;
};
InvertibleSearch search_invertible(const Field& f, const Matrix& offset, const std::vector<Matrix>& family,
                                   const SearchOptions& opt, bool certify);

/// Colinear maps C -> A as n x m matrices; `totality` sends vec(lambda) to
/// sum 1<0> lambda(1<1>).
struct IntegralSpace {
  Subspace space;
  std::vector<Matrix> basis;
  Matrix totality;
  std::optional<Matrix> total;  // one total integral
  Subspace total_directions;    // coordinates (in `basis`) keeping totality
  bool contains(const Matrix& lambda) const;
  bool is_total(const Matrix& lambda, const Vector& unit) const;
};
IntegralSpace integral_space(const Context& ctx);

struct CleftWitness {
  Matrix lambda;
  Matrix lambda_bar;
  bool total = false;
};

struct CleftResult {
  Decision status = Decision::Inconclusive;
  std::optional<CleftWitness> witness;
  std::string certificate;
  std::size_t evaluations = 0;
};
CleftResult find_cleft(const Context& ctx, const IntegralSpace& integrals, const SearchOptions& opt = {});

/// lambda colinear iff lambda_bar in Q; in the x-case also lambda_hat =
/// lambda_bar lambda(x) lies in Q with lambda_hat(x) = 1.
struct CoQCheck {
  bool lambda_colinear = false;
  bool lambda_bar_in_q = false;
  bool biconditional = false;
  std::optional<Matrix> lambda_hat;
  bool lambda_hat_in_q = false;
  bool lambda_hat_normalised = false;
};
CoQCheck lemma_coQ_check(const Context& ctx, const IntegralSpace& integrals, const Subspace& q, const Matrix& lambda,
                         const Matrix& lambda_bar);

/// x in C with rho_A(a) = sum a_psi (x) x^psi and x group-like, if any.
std::optional<Vector> x_case_element(const Context& ctx);

/// gamma_M : M -> M^{coC} (x) C, m -> sum m<0> lambda_bar (x) m<1>, and
/// n (x) c -> n lambda(c) back; coordinates of M^{coC} are those of `coinv`.
struct GammaResult {
  Subspace coinv;
  Matrix gamma;
  Matrix inverse;
  bool lands = false;
  bool left_inverse = false;
  bool right_inverse = false;
  bool isomorphism() const { return lands && left_inverse && right_inverse; }
};
GammaResult gamma_M(const Context& ctx, const CleftWitness& w, const Comodule& m);

/// m -> sum m<0> lambda_bar (x)_B lambda(m<1>) against Psi_M.
struct PsiTildeResult {
  bool left_inverse = false;
  bool right_inverse = false;
  bool inverse() const { return left_inverse && right_inverse; }
};
PsiTildeResult psi_tilde_M(const Context& ctx, const CoinvariantSubring& b, const CleftWitness& w, const Comodule& m);

/// Left B-linear right C-colinear isomorphisms A -> B (x) C.
struct NormalBasisResult {
  Decision status = Decision::Inconclusive;
  Subspace maps;  // vec of (dim B * m) x n matrices
  std::optional<Matrix> witness;
  std::string certificate;
};
NormalBasisResult normal_basis_check(const Context& ctx, const CoinvariantSubring& b, const SearchOptions& opt = {});

struct CleftReport {
  IntegralSpace integrals;
  CleftResult cleft;
  NormalBasisResult normal_basis;
  std::optional<CoQCheck> coq;
  std::vector<std::pair<std::string, bool>> gamma;      // per witness
  std::vector<std::pair<std::string, bool>> psi_tilde;  // per witness
  std::optional<Vector> x_case;  // x with rho_A(a) = a_psi (x) x^psi, x group-like
  ClauseTable main;
  std::optional<ClauseTable> xcase;  // only when x_case_element exists
};
/// Integrals, cleftness, normal basis and the clause tables of the main
/// theorem and, when it applies, the x-case.
CleftReport check_theorem_main(const Context& ctx, const MoritaContext& mc, const StructureVerdict& sv,
                               const std::vector<Comodule>& witnesses, const SearchOptions& opt = {});

}  // namespace coringlab
