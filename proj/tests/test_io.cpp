#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "coringlab/report.hpp"

using namespace coringlab;

namespace {

const Field kQ = Field::rationals();

std::string temp_file(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / ("coringlab-test-" + name);
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST(Io, ScalarsAndMatrices) {
  Scalar big = Scalar::parse(kQ, "-123456789012345678901234567890/7");
  EXPECT_EQ(scalar_from_json(kQ, scalar_to_json(big)), big);
  EXPECT_EQ(scalar_to_json(Scalar::from_int(kQ, 5)), json("5"));
  EXPECT_EQ(scalar_from_json(kQ, json(3)), Scalar::from_int(kQ, 3));
  const Field f7 = Field::prime(7);
  EXPECT_EQ(field_from_json(field_to_json(f7)), f7);
  EXPECT_EQ(field_to_json(kQ), json("Q"));
  Matrix m = Matrix::from_ints(kQ, {{1, -2, 0}, {4, 5, 6}});
  EXPECT_EQ(matrix_from_json(kQ, matrix_to_json(m)), m);
  json bad = matrix_to_json(m);
  bad["rows"] = 3;
  EXPECT_ANY_THROW(matrix_from_json(kQ, bad));
}

TEST(Io, InstanceRoundTrip) {
  for (const auto& name : fixture_names()) {
    Instance inst = builtin_fixture(name);
    Instance back = instance_from_json(instance_to_json(inst));
    EXPECT_EQ(back.name, inst.name);
    EXPECT_EQ(*back.data.algebra, *inst.data.algebra);
    EXPECT_EQ(back.data.psi, inst.data.psi);
    EXPECT_EQ(back.data.unit_coaction, inst.data.unit_coaction);
    EXPECT_EQ(back.data.coalgebra.comult(), inst.data.coalgebra.comult());
    EXPECT_EQ(back.doi_koppinen, inst.doi_koppinen);
    EXPECT_EQ(instance_digest(back), instance_digest(inst));
    EXPECT_EQ(instance_to_json(back), instance_to_json(inst));
  }
}

TEST(Io, FrozenFixtureFilesMatchBuiltins) {
  for (const auto& name : fixture_names()) {
    Fixture fx = fixture(name);
    EXPECT_EQ(instance_to_json(fx.instance), instance_to_json(builtin_fixture(name))) << name;
  }
}

TEST(Io, FrozenExpectedValuesAreReproduced) {
  for (const auto& name : fixture_names()) {
    Fixture fx = fixture(name);
    EXPECT_EQ(expected_values(analyze(fx.instance)), fx.expected) << name;
  }
}

TEST(Io, ComodulesAndModulesRoundTrip) {
  Context ctx = make_context(builtin_fixture("FIX-S").data);
  Comodule a = algebra_comodule(ctx);
  Comodule back = comodule_from_json(ctx, comodule_to_json(a));
  EXPECT_EQ(back.coaction, a.coaction);
  EXPECT_EQ(back.action, a.action);
  Module r = regular_module(ctx.algebra, Side::Left);
  Module rb = module_from_json(ctx.algebra, module_to_json(r));
  EXPECT_EQ(rb.action, r.action);
  EXPECT_EQ(rb.side, r.side);
}

TEST(Io, LoadErrors) {
  EXPECT_THROW(load_instance("/nonexistent/instance.json"), ParseError);
  EXPECT_THROW(load_instance(temp_file("malformed.json", "{ \"field\": ")), ParseError);
  json j = instance_to_json(builtin_fixture("FIX-H"));
  j["algebra"]["dim"] = 3;
  EXPECT_THROW(load_instance(temp_file("shape.json", j.dump())), ParseError);
  j = instance_to_json(builtin_fixture("FIX-H"));
  j["field"] = "F_4";
  EXPECT_THROW(load_instance(temp_file("field.json", j.dump())), ParseError);
}

TEST(Report, JsonRoundTripAndLookup) {
  for (const auto& name : fixture_names()) {
    AnalysisReport r = analyze(builtin_fixture(name), {.seed = 4, .kernel_witnesses = 2, .timing = false});
    json j = report_to_json(r);
    EXPECT_EQ(report_from_json(j), r) << name;
    EXPECT_EQ(dump(report_to_json(report_from_json(j))), dump(j)) << name;
    EXPECT_EQ(report_value(j, "galois"), name == "FIX-N" ? "false" : "true");
    EXPECT_EQ(report_value(j, "B_dim"), name == "FIX-T" ? "2" : "1") << name;
    EXPECT_EQ(report_value(j, "instance.name"), name);
    EXPECT_FALSE(report_value(j, "no_such_key"));
    EXPECT_FALSE(j.contains("timing_ms"));
    EXPECT_NE(report_to_text(r).find("summary.galois"), std::string::npos);
  }
}

TEST(Report, DeterministicAcrossRuns) {
  Instance inst = builtin_fixture("FIX-S");
  EXPECT_EQ(dump(report_to_json(analyze(inst, {.seed = 9}))), dump(report_to_json(analyze(inst, {.seed = 9}))));
}

TEST(Report, RandomFamilyIsConsistent) {
  for (const Instance& inst : random_dk_family(0)) {
    AnalysisReport r = analyze(inst);
    EXPECT_TRUE(axioms_ok(r.axioms)) << inst.name;
    EXPECT_TRUE(r.consistency_failures.empty()) << inst.name << ": " << (r.consistency_failures.empty() ? "" : r.consistency_failures.front());
  }
}
