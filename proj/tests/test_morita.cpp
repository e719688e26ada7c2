#include <gtest/gtest.h>

#include "coringlab/galois.hpp"
#include "coringlab/report.hpp"
#include "mutation.hpp"

using namespace coringlab;
using coringlab::testing::to_q;
using coringlab::testing::to_raw;

namespace {

const Field kQ = Field::rationals();

struct Built {
  Instance inst;
  Context ctx;
  MoritaContext mc;
};

Built build(const Instance& inst) {
  Context ctx = make_context(inst.data);
  MoritaContext mc = build_context(ctx);
  return {inst, std::move(ctx), std::move(mc)};
}

oracle::Vec raw_vec(const Vector& v) { return coringlab::testing::raw_vec(v); }

std::vector<Instance> all_instances() {
  std::vector<Instance> out;
  for (const auto& name : fixture_names()) out.push_back(builtin_fixture(name));
  for (auto& inst : random_dk_family(0)) out.push_back(std::move(inst));
  return out;
}

}  // namespace

TEST(Morita, CoinvariantsAndQMatchOracle) {
  for (const Instance& inst : all_instances()) {
    const oracle::Raw raw = to_raw(inst.data);
    Built b = build(inst);
    EXPECT_EQ(b.mc.b.ring->dim(), oracle::coinvariant_dim(raw)) << inst.name;
    EXPECT_EQ(b.mc.q.dim(), oracle::q_space(raw).size()) << inst.name;
    EXPECT_TRUE(b.mc.b.verdict.ok()) << inst.name;
    EXPECT_EQ(coinvariants(b.ctx, algebra_comodule(b.ctx)), b.mc.b.space) << inst.name;
  }
}

TEST(Morita, ContextIdentitiesHoldExactly) {
  for (const auto& name : fixture_names()) {
    Built b = build(builtin_fixture(name));
    EXPECT_TRUE(b.mc.verdict.ok()) << name << ": " << (b.mc.verdict.ok() ? "" : b.mc.verdict.failures.front());
  }
}

TEST(Morita, HeadlineDimensions) {
  const std::map<std::string, std::pair<std::size_t, std::size_t>> want{
      {"FIX-T", {2, 2}}, {"FIX-H", {1, 2}}, {"FIX-N", {1, 1}}, {"FIX-S", {1, 4}}};
  for (const auto& [name, dims] : want) {
    Built b = build(builtin_fixture(name));
    EXPECT_EQ(b.mc.b.ring->dim(), dims.first) << name;
    EXPECT_EQ(b.mc.q.dim(), dims.second) << name;
  }
}

TEST(Morita, QHatIsNormalisedElementOfQ) {
  for (const auto& name : fixture_names()) {
    Built b = build(builtin_fixture(name));
    auto qhat = find_qhat(b.ctx, b.mc);
    ASSERT_TRUE(qhat) << name;
    EXPECT_TRUE(b.mc.q.contains(vec(*qhat))) << name;
    const oracle::Raw raw = to_raw(b.inst.data);
    EXPECT_EQ(oracle::at_x(raw, raw_vec(vec(*qhat))), raw_vec(b.ctx.algebra->unit())) << name;
  }
  Built h = build(builtin_fixture("FIX-H"));
  EXPECT_EQ(*find_qhat(h.ctx, h.mc), Matrix::from_ints(kQ, {{1, 0}, {0, 0}}));
  Built n = build(builtin_fixture("FIX-N"));
  EXPECT_EQ(*find_qhat(n.ctx, n.mc), Matrix::from_ints(kQ, {{0, 1}}));
}

TEST(Morita, PairingSurjectivity) {
  const std::map<std::string, std::pair<bool, bool>> want{
      {"FIX-T", {true, true}}, {"FIX-H", {true, true}}, {"FIX-N", {false, true}}, {"FIX-S", {true, true}}};
  for (const auto& [name, fg] : want) {
    Built b = build(builtin_fixture(name));
    EXPECT_EQ(rank(b.mc.f) == b.ctx.n * b.ctx.m, fg.first) << name;
    EXPECT_EQ(rank(b.mc.g) == b.mc.b.ring->dim(), fg.second) << name;
  }
}

TEST(Morita, TraceMapSplitsInclusion) {
  for (const auto& name : fixture_names()) {
    Built b = build(builtin_fixture(name));
    auto qhat = find_qhat(b.ctx, b.mc);
    ASSERT_TRUE(qhat);
    TraceResult t = trace_map(b.ctx, b.mc, *qhat);
    EXPECT_TRUE(t.left_b_linear) << name;
    EXPECT_TRUE(t.identity_on_b) << name;
  }
}

TEST(Morita, SurjAndCFiniteTablesOnFixtures) {
  for (const auto& name : fixture_names()) {
    Built b = build(builtin_fixture(name));
    auto w = witness_family(b.ctx, 2, 0);
    ClauseTable surj = check_theorem_surj(b.ctx, b.mc, w);
    ClauseTable cfin = check_theorem_Cfinite(b.ctx, b.mc, w);
    EXPECT_TRUE(surj.agreement()) << name;
    EXPECT_TRUE(cfin.agreement()) << name;
    EXPECT_EQ(surj.value("1"), true) << name;
    EXPECT_EQ(cfin.value("1"), name != "FIX-N") << name;
  }
}

TEST(Galois, BetaRankMatchesOracle) {
  const std::map<std::string, std::size_t> want{{"FIX-H", 4}, {"FIX-N", 1}, {"FIX-S", 16}};
  for (const auto& [name, r] : want) {
    Built b = build(builtin_fixture(name));
    ASSERT_EQ(b.mc.b.ring->dim(), 1U);
    BetaResult beta_r = beta(b.ctx, b.mc.b);
    EXPECT_EQ(beta_r.verdict.rank, r) << name;
    EXPECT_EQ(oracle::beta_rank_over_ground(to_raw(b.inst.data)), r) << name;
    EXPECT_EQ(beta_r.bijective(), name != "FIX-N") << name;
    EXPECT_TRUE(beta_r.coring_morphism) << name;
  }
}

TEST(Galois, StructureVerdicts) {
  for (const auto& name : fixture_names()) {
    Built b = build(builtin_fixture(name));
    auto w = witness_family(b.ctx, 2, 0);
    StructureVerdict sv = structure_report(b.ctx, b.mc, w);
    const bool good = name != "FIX-N";
    EXPECT_EQ(sv.galois, good) << name;
    EXPECT_EQ(sv.weak, good) << name;
    EXPECT_EQ(sv.strong, good) << name;
    EXPECT_TRUE(sv.flat) << name;
    EXPECT_TRUE(sv.faithfully_flat) << name;
    EXPECT_TRUE(sv.implication_failures.empty()) << name;
    EXPECT_TRUE(sv.fin_gen.agreement()) << name;
    EXPECT_TRUE(sv.fin_prog.agreement()) << name;
    for (const auto& r : sv.witnesses) EXPECT_TRUE(r.coinvariants_match) << name << " " << r.name;
  }
}

TEST(Comodule, WitnessesAreEntwinedModules) {
  for (const auto& name : fixture_names()) {
    Context ctx = make_context(builtin_fixture(name).data);
    for (const Comodule& m : witness_family(ctx, 2, 5)) {
      EXPECT_TRUE(verify_comodule(ctx, m).ok()) << name << " " << m.name;
      EXPECT_EQ(coinvariants(ctx, m), x_invariants(ctx, dual_action(ctx, m))) << name << " " << m.name;
      EXPECT_TRUE(verify_module(dual_action(ctx, m)).ok()) << name << " " << m.name;
    }
  }
}

TEST(Comodule, BrokenCoactionIsRejected) {
  Context ctx = make_context(builtin_fixture("FIX-S").data);
  Comodule a = algebra_comodule(ctx);
  a.coaction = a.coaction * Scalar::from_int(kQ, 2);
  EXPECT_FALSE(verify_comodule(ctx, a).ok());
}

TEST(Comodule, ColinearMapsIntoCoring) {
  Context ctx = make_context(builtin_fixture("FIX-H").data);
  Comodule a = algebra_comodule(ctx);
  Comodule c = coring_comodule(ctx);
  Subspace hom = hom_comodule(ctx, a, c);
  EXPECT_GE(hom.dim(), 1U);
  for (const auto& v : hom.vectors()) {
    Matrix f = unvec(kQ, c.dim, a.dim, v);
    EXPECT_EQ(c.coaction * f, kron(f, Matrix::identity(kQ, ctx.m)) * a.coaction);
  }
}

TEST(Oracle, ConvolutionInverseOfIdentityAgrees) {
  const oracle::Raw r = to_raw(builtin_fixture("FIX-S").data);
  Matrix s = sweedler_antipode(kQ);
  oracle::Vec id(16, 0), anti = raw_vec(vec(s));
  for (std::size_t i = 0; i < 4; ++i) id[i * 4 + i] = 1;
  EXPECT_EQ(oracle::convolve(r, id, anti), oracle::convolution_unit(r));
  EXPECT_EQ(oracle::convolve(r, anti, id), oracle::convolution_unit(r));
  EXPECT_EQ(to_q(Scalar::rational(-3, 4)), oracle::Q(-3, 4));
}
