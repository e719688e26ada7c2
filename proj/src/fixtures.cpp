#include "coringlab/fixtures.hpp"

#include <random>
#include <stdexcept>

#include "coringlab/linalg.hpp"

namespace coringlab {

AlgebraPtr cyclic_group_algebra(const Field& f, std::size_t n) {
  std::vector<Vector> prods;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) prods.push_back(unit_vector(f, n, (i + j) % n));
  }
  return std::make_shared<Algebra>(f, n, std::move(prods), unit_vector(f, n, 0));
}

Coalgebra cyclic_group_coalgebra(const Field& f, std::size_t n) {
  Matrix comult(f, n * n, n);
  for (std::size_t i = 0; i < n; ++i) comult(i * n + i, i) = Scalar::one(f);
  return Coalgebra(f, n, std::move(comult), Vector(n, Scalar::one(f)));
}

AlgebraPtr truncated_polynomial(const Field& f, std::size_t k, const Scalar& c) {
  std::vector<Vector> prods;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      prods.push_back(i + j < k ? unit_vector(f, k, i + j) : scaled(unit_vector(f, k, i + j - k), c));
    }
  }
  return std::make_shared<Algebra>(f, k, std::move(prods), unit_vector(f, k, 0));
}

AlgebraPtr sweedler_algebra(const Field& f) {
  const std::int64_t table[4][4][2] = {
      {{0, 1}, {1, 1}, {2, 1}, {3, 1}},
      {{1, 1}, {0, 1}, {3, 1}, {2, 1}},
      {{2, 1}, {3, -1}, {0, 0}, {0, 0}},
      {{3, 1}, {2, -1}, {0, 0}, {0, 0}},
  };
  std::vector<Vector> prods;
  for (const auto& row : table) {
    for (const auto& e : row) prods.push_back(scaled(unit_vector(f, 4, static_cast<std::size_t>(e[0])), Scalar::from_int(f, e[1])));
  }
  return std::make_shared<Algebra>(f, 4, std::move(prods), unit_vector(f, 4, 0));
}

Coalgebra sweedler_coalgebra(const Field& f) {
  Matrix comult(f, 16, 4);
  const Scalar one = Scalar::one(f);
  comult(0 * 4 + 0, 0) = one;
  comult(1 * 4 + 1, 1) = one;
  comult(2 * 4 + 0, 2) = one;
  comult(1 * 4 + 2, 2) = one;
  comult(3 * 4 + 1, 3) = one;
  comult(0 * 4 + 3, 3) = one;
  return Coalgebra(f, 4, std::move(comult), Vector{one, one, Scalar::zero(f), Scalar::zero(f)});
}

Matrix sweedler_antipode(const Field& f) { return Matrix::from_ints(f, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}}); }

namespace {

Vector one_tensor(const Field& f, std::size_t n, std::size_t m, std::size_t c) {
  Vector u = zero_vector(f, n * m);
  u[c] = Scalar::one(f);
  return u;
}

Instance dk_instance(std::string name, AlgebraPtr a, AlgebraPtr h, const Coalgebra& hc, Matrix coaction) {
  DoiKoppinenResult dk = doi_koppinen(a, *h, hc, coaction);
  if (!dk.verdict.ok()) throw std::logic_error("invalid Doi-Koppinen data for " + name + ": " + dk.verdict.failures.front());
  Instance inst;
  inst.name = std::move(name);
  inst.doi_koppinen = true;
  inst.bialgebra = std::move(h);
  inst.coaction = coaction;
  inst.data = EntwiningData{a, hc, dk.psi, coaction * a->unit()};
  return inst;
}

}  // namespace

std::vector<std::string> fixture_names() { return {"FIX-T", "FIX-H", "FIX-N", "FIX-S"}; }

Instance builtin_fixture(const std::string& name) {
  const Field f = Field::rationals();
  if (name == "FIX-T") {
    AlgebraPtr a = truncated_polynomial(f, 2, Scalar::zero(f));
    Instance inst;
    inst.name = name;
    inst.data = EntwiningData{a, Coalgebra::ground(f), flip_entwining(2, 1, f), one_tensor(f, 2, 1, 0)};
    return inst;
  }
  if (name == "FIX-H") {
    AlgebraPtr h = cyclic_group_algebra(f, 2);
    Coalgebra hc = cyclic_group_coalgebra(f, 2);
    return dk_instance(name, h, h, hc, hc.comult());
  }
  if (name == "FIX-N") {
    Instance inst;
    inst.name = name;
    inst.data = EntwiningData{std::make_shared<Algebra>(Algebra::ground(f)), cyclic_group_coalgebra(f, 2), flip_entwining(1, 2, f),
                              one_tensor(f, 1, 2, 1)};
    return inst;
  }
  if (name == "FIX-S") {
    AlgebraPtr h = sweedler_algebra(f);
    Coalgebra hc = sweedler_coalgebra(f);
    return dk_instance(name, h, h, hc, hc.comult());
  }
  throw std::invalid_argument("unknown fixture: " + name);
}

Instance random_dk_instance(std::size_t n, std::uint64_t seed) {
  const Field f = Field::rationals();
  std::mt19937_64 rng(seed);
  AlgebraPtr h = cyclic_group_algebra(f, n);
  Coalgebra hc = cyclic_group_coalgebra(f, n);
  if (rng() % 5 == 0) return dk_instance("kZ" + std::to_string(n) + "/self", h, h, hc, hc.comult());

  const std::size_t k = 1 + rng() % 4;
  std::size_t s = rng() % n;
  Scalar c = Scalar::zero(f);
  if (rng() % 2 == 0) {
    c = Scalar::from_int(f, static_cast<std::int64_t>(rng() % 5) - 2);
    if (c.is_zero()) c = Scalar::one(f);
    while ((s * k) % n != 0) s = (s + 1) % n;
  }
  AlgebraPtr a = truncated_polynomial(f, k, c);
  Matrix coaction(f, k * n, k);
  for (std::size_t i = 0; i < k; ++i) coaction(i * n + (s * i) % n, i) = Scalar::one(f);
  std::string name = "kZ" + std::to_string(n) + "/t^" + std::to_string(k) + "=" + c.to_string() + ",deg" + std::to_string(s);
  return dk_instance(std::move(name), a, h, hc, coaction);
}

std::vector<Instance> random_dk_family(std::uint64_t seed) {
  std::vector<Instance> out;
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < 25; ++i) out.push_back(random_dk_instance(2 + i % 3, rng()));
  return out;
}

EntwiningData change_coalgebra_basis(const EntwiningData& e, const Matrix& p) {
  const Field& f = e.algebra->field();
  const std::size_t n = e.algebra->dim();
  const std::size_t m = e.coalgebra.dim();
  auto pinv = inverse(p);
  if (!pinv) throw ShapeError("basis change is not invertible");
  Matrix comult = kron(*pinv, *pinv) * e.coalgebra.comult() * p;
  Vector counit = (e.coalgebra.counit_row() * p).row(0);
  Matrix psi = kron(Matrix::identity(f, n), *pinv) * e.psi * kron(p, Matrix::identity(f, n));
  Vector unit = kron(Matrix::identity(f, n), *pinv) * e.unit_coaction;
  return EntwiningData{e.algebra, Coalgebra(f, m, std::move(comult), std::move(counit)), std::move(psi), std::move(unit)};
}

}  // namespace coringlab
