#include <gtest/gtest.h>

#include "coringlab/report.hpp"
#include "mutation.hpp"

using namespace coringlab;
using coringlab::testing::categories;
using coringlab::testing::to_raw;

namespace {
const Field kQ = Field::rationals();
}

TEST(Entwining, FixturesMatchHandEnteredData) {
  const oracle::Raw h = to_raw(builtin_fixture("FIX-H").data);
  const oracle::Raw h0 = oracle::group_z2_over_itself();
  EXPECT_EQ(h.mult, h0.mult);
  EXPECT_EQ(h.unit, h0.unit);
  EXPECT_EQ(h.comult, h0.comult);
  EXPECT_EQ(h.counit, h0.counit);
  EXPECT_EQ(h.psi, h0.psi);
  EXPECT_EQ(h.u, h0.u);

  const oracle::Raw n = to_raw(builtin_fixture("FIX-N").data);
  const oracle::Raw n0 = oracle::rationals_over_z2();
  EXPECT_EQ(n.psi, n0.psi);
  EXPECT_EQ(n.u, n0.u);
  EXPECT_EQ(n.comult, n0.comult);
}

TEST(Entwining, FixturesPassEveryVerifier) {
  for (const auto& name : fixture_names()) {
    AxiomFailures a = verify_instance(builtin_fixture(name));
    for (const auto& [key, failures] : a) EXPECT_TRUE(failures.empty()) << name << " " << key;
    EXPECT_TRUE(axioms_ok(a));
  }
}

TEST(Entwining, OracleAgreesOnFixtures) {
  for (const auto& name : fixture_names()) {
    EXPECT_TRUE(oracle::entwining_violations(to_raw(builtin_fixture(name).data)).empty()) << name;
  }
}

TEST(Entwining, DoiKoppinenSweedlerMatchesOracle) {
  AlgebraPtr h = sweedler_algebra(kQ);
  Coalgebra hc = sweedler_coalgebra(kQ);
  auto dk = doi_koppinen(h, *h, hc, hc.comult());
  ASSERT_TRUE(dk.verdict.ok());
  EXPECT_EQ(dk.psi, builtin_fixture("FIX-S").data.psi);
  // psi(c (x) a) = sum a1 (x) c a2
  const oracle::Raw r = to_raw(*h, hc, dk.psi, {});
  for (std::size_t c = 0; c < 4; ++c)
    for (std::size_t a = 0; a < 4; ++a) {
      oracle::Mat want(4, oracle::Vec(4, 0));
      for (std::size_t a1 = 0; a1 < 4; ++a1)
        for (std::size_t a2 = 0; a2 < 4; ++a2) {
          oracle::Q coeff = r.comult[a][a1][a2];
          if (coeff == 0) continue;
          oracle::Vec prod = oracle::times(r, oracle::basis(4, c), oracle::basis(4, a2));
          for (std::size_t k = 0; k < 4; ++k) want[a1][k] += coeff * prod[k];
        }
      EXPECT_EQ(r.psi[c][a], want) << c << "," << a;
    }
}

TEST(Entwining, ZeroPsiViolatesUnitAxiom) {
  Instance inst = builtin_fixture("FIX-H");
  inst.doi_koppinen = false;
  inst.data.psi = Matrix(kQ, 4, 4);
  AxiomFailures a = verify_instance(inst);
  ASSERT_FALSE(a["entwining"].empty());
  EXPECT_TRUE(categories(Verdict{a["entwining"]}).count("unit axiom"));
}

TEST(Entwining, NonGroupLikeUnitCoactionRejected) {
  Instance inst = builtin_fixture("FIX-H");
  inst.data.unit_coaction = {Scalar::one(kQ), Scalar::one(kQ), Scalar::zero(kQ), Scalar::zero(kQ)};
  AxiomFailures a = verify_instance(inst);
  EXPECT_FALSE(a["group_like"].empty());
  EXPECT_FALSE(axioms_ok(a));
}

TEST(Entwining, SharpRingOfRationalsOverZ2IsProductOfFields) {
  Context ctx = make_context(builtin_fixture("FIX-N").data);
  const Algebra& s = *ctx.sharp;
  ASSERT_EQ(s.dim(), 2U);
  EXPECT_TRUE(verify_sharp_iso(ctx).ok());
  EXPECT_EQ(s.product(0, 0), unit_vector(kQ, 2, 0));
  EXPECT_EQ(s.product(1, 1), unit_vector(kQ, 2, 1));
  EXPECT_TRUE(is_zero(s.product(0, 1)));
  EXPECT_TRUE(is_zero(s.product(1, 0)));
  EXPECT_EQ(s.unit(), (Vector{Scalar::one(kQ), Scalar::one(kQ)}));
}

TEST(Entwining, SharpRingMatchesDualRingOnFixtures) {
  for (const auto& name : fixture_names()) {
    Context ctx = make_context(builtin_fixture(name).data);
    EXPECT_TRUE(verify_sharp_iso(ctx).ok()) << name;
    EXPECT_TRUE(verify_algebra(*ctx.sharp).ok()) << name;
    EXPECT_EQ(ctx.sharp->dim(), ctx.n * ctx.m);
  }
}

TEST(Coring, FixtureCoringsAreCorings) {
  for (const auto& name : fixture_names()) {
    const Instance inst = builtin_fixture(name);
    Coring c = build_coring(inst.data.algebra, inst.data.coalgebra, inst.data.psi);
    EXPECT_TRUE(verify_coring(c).ok()) << name;
    Context ctx = make_context(inst.data);
    EXPECT_TRUE(is_grouplike(ctx.coring, ctx.x)) << name;
  }
  EXPECT_TRUE(verify_coring(trivial_coring(sweedler_algebra(kQ))).ok());
}

TEST(Mutations, VerifiersNameTheViolatedAxiom) {
  for (const auto& name : fixture_names()) {
    auto outcomes = coringlab::testing::mutation_suite(builtin_fixture(name), 17);
    EXPECT_EQ(outcomes.size(), 40U) << name;
    for (const auto& o : outcomes) {
      EXPECT_TRUE(o.ok()) << o.fixture << " " << o.verifier << " " << o.mutation << ": expected "
                          << coringlab::testing::join(o.expected) << ", reported " << coringlab::testing::join(o.reported);
    }
  }
}

TEST(Entwining, FlipIsAlwaysAnEntwining) {
  for (const auto& name : fixture_names()) {
    const Instance inst = builtin_fixture(name);
    const std::size_t n = inst.data.algebra->dim(), m = inst.data.coalgebra.dim();
    Matrix flip = flip_entwining(n, m, kQ);
    auto bad = oracle::entwining_violations(to_raw(*inst.data.algebra, inst.data.coalgebra, flip, {}));
    EXPECT_TRUE(bad.empty()) << name;
    EXPECT_TRUE(verify_entwining(inst.data.algebra, inst.data.coalgebra, flip).ok()) << name;
  }
}
