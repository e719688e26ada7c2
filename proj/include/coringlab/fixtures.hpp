#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "coringlab/entwining.hpp"

namespace coringlab {

/// k Z_n with basis g^0..g^{n-1}.
AlgebraPtr cyclic_group_algebra(const Field& f, std::size_t n);
Coalgebra cyclic_group_coalgebra(const Field& f, std::size_t n);
/// k[t]/(t^k - c) with basis 1, t, ..., t^{k-1}.
AlgebraPtr truncated_polynomial(const Field& f, std::size_t k, const Scalar& c);
/// Sweedler's H4 on 1, g, x, gx with g^2 = 1, x^2 = 0, xg = -gx,
/// Delta(x) = x (x) 1 + g (x) x.
AlgebraPtr sweedler_algebra(const Field& f);
Coalgebra sweedler_coalgebra(const Field& f);
/// The antipode of H4: 1 -> 1, g -> g, x -> -gx, gx -> x.
Matrix sweedler_antipode(const Field& f);

/// An entwining given either directly or through Doi-Koppinen data over a
/// bialgebra H = C.
struct Instance {
  std::string name;
  EntwiningData data;
  bool doi_koppinen = false;
  AlgebraPtr bialgebra;  // algebra structure on C when doi_koppinen
  Matrix coaction;       // A -> A (x) H when doi_koppinen
};

/// Builds FIX-T, FIX-H, FIX-N or FIX-S; throws std::invalid_argument otherwise.
Instance builtin_fixture(const std::string& name);
std::vector<std::string> fixture_names();

/// Doi-Koppinen instance over k Z_n: A = k[t]/(t^k - c) graded by deg t = s,
/// or A = k Z_n itself.
Instance random_dk_instance(std::size_t n, std::uint64_t seed);
/// The 25 seeded instances used by the agreement suites, n cycling over 2, 3, 4.
std::vector<Instance> random_dk_family(std::uint64_t seed);

/// Replaces the basis of C by the columns of `p` (invertible m x m) and
/// transports psi, Delta, eps and rho_A(1).
EntwiningData change_coalgebra_basis(const EntwiningData& e, const Matrix& p);

}  // namespace coringlab
