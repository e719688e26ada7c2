#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "coringlab/report.hpp"
#include "mutation.hpp"
#include "support.hpp"

using namespace coringlab;
using coringlab::testing::raw_vec;
using coringlab::testing::to_raw;

namespace {

const Field kQ = Field::rationals();

struct Outcome {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

struct Criterion {
  int id;
  std::string description;
  double limit_ms;  // 0 when untimed
  std::function<Outcome()> run;
};

const ClauseTable* table(const AnalysisReport& r, const std::string& theorem) {
  for (const auto& t : r.theorems)
    if (t.theorem == theorem) return &t;
  return nullptr;
}

std::vector<Instance> agreement_set() {
  std::vector<Instance> out;
  for (const auto& name : fixture_names()) out.push_back(builtin_fixture(name));
  for (auto& inst : random_dk_family(0)) out.push_back(std::move(inst));
  return out;
}

Outcome axiom_suites() {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& name : fixture_names()) {
    const Instance inst = builtin_fixture(name);
    const EntwiningData& e = inst.data;
    o.require(verify_algebra(*e.algebra).ok() && verify_coalgebra(e.coalgebra).ok() &&
                  verify_entwining(e.algebra, e.coalgebra, e.psi).ok() &&
                  verify_coring(build_coring(e.algebra, e.coalgebra, e.psi)).ok(),
              name + " fails a verifier");
    for (const auto& m : coringlab::testing::mutation_suite(inst, 17)) {
      ++checked;
      o.require(m.ok(), m.fixture + " " + m.verifier + " " + m.mutation + ": expected " +
                            coringlab::testing::join(m.expected) + ", reported " + coringlab::testing::join(m.reported));
    }
  }
  if (o.pass) o.detail = std::to_string(checked) + " corruptions named correctly";
  return o;
}

Outcome morita_integrity() {
  Outcome o;
  for (const auto& name : fixture_names()) {
    Context ctx = make_context(builtin_fixture(name).data);
    MoritaContext mc = build_context(ctx);
    o.require(mc.verdict.ok(), name + ": " + (mc.verdict.ok() ? "" : mc.verdict.failures.front()));
  }
  return o;
}

struct Tables {
  std::string name;
  ClauseTable surj, cfin;
};

std::vector<Tables> agreement_tables() {
  std::vector<Tables> out;
  for (const Instance& inst : agreement_set()) {
    Context ctx = make_context(inst.data);
    MoritaContext mc = build_context(ctx);
    auto w = witness_family(ctx, 2, 0);
    out.push_back({inst.name, check_theorem_surj(ctx, mc, w), check_theorem_Cfinite(ctx, mc, w)});
  }
  return out;
}

std::vector<Tables>& cached_tables() {
  static std::vector<Tables> t = agreement_tables();
  return t;
}

std::string row(const ClauseTable& t) {
  std::string s;
  for (const auto& c : t.clauses) s += c.id + "=" + (c.value ? (*c.value ? "T" : "F") : "-") + " ";
  return s;
}

Outcome surj_agreement() {
  Outcome o;
  std::size_t galois = 0;
  for (const auto& t : cached_tables()) {
    o.require(t.surj.agreement(), t.name + ": " + row(t.surj));
    for (const char* id : {"1", "2", "3", "4", "5"}) o.require(t.surj.value(id).has_value(), t.name + " clause " + id + " missing");
    galois += t.surj.value("1").value_or(false);
  }
  if (o.pass) o.detail = std::to_string(cached_tables().size()) + " instances, " + std::to_string(galois) + " with G surjective";
  return o;
}

Outcome cfinite_agreement() {
  Outcome o;
  std::size_t split = 0;
  for (const auto& t : cached_tables()) {
    o.require(t.cfin.agreement(), t.name + ": " + row(t.cfin));
    for (const char* id : {"1", "2", "3", "4", "5"}) o.require(t.cfin.value(id).has_value(), t.name + " clause " + id + " missing");
    const auto v = t.cfin.value("1");
    for (const char* id : {"2a", "2b", "2c", "3a", "3b"})
      if (t.cfin.value(id) != v) {
        ++split;
        break;
      }
  }
  if (o.pass)
    o.detail = std::to_string(cached_tables().size()) + " instances; sub-parts 2a-c, 3a-b compared as conjunctions (" +
               std::to_string(split) + " instances where a single sub-part differs)";
  return o;
}

Outcome fix_h() {
  Outcome o;
  const Instance inst = builtin_fixture("FIX-H");
  const oracle::Raw raw = to_raw(inst.data);
  AnalysisReport r = analyze(inst);
  o.require(oracle::coinvariant_dim(raw) == 1 && r.dims.at("B") == 1, "dim B");
  o.require(oracle::q_space(raw).size() == 2 && r.dims.at("Q") == 2, "dim Q");
  o.require(oracle::beta_rank_over_ground(raw) == 4 && r.flags.at("galois"), "beta bijective");
  o.require(r.qhat && *r.qhat == Matrix::from_ints(kQ, {{1, 0}, {0, 0}}), "q-hat = (1 -> 1, g -> 0)");
  if (r.qhat) o.require(oracle::at_x(raw, raw_vec(vec(*r.qhat))) == raw.unit, "q-hat(x) = 1 under the oracle");
  o.require(r.cleft == Decision::Yes && r.lambda && r.lambda->is_identity() && r.lambda_bar && r.lambda_bar->is_identity(),
            "cleft with lambda = lambda_bar = id");
  if (r.lambda && r.lambda_bar) {
    const auto l = raw_vec(vec(*r.lambda)), lb = raw_vec(vec(*r.lambda_bar));
    o.require(oracle::convolve(raw, l, lb) == oracle::convolution_unit(raw), "oracle convolution inverse");
    o.require(oracle::integrals(raw).size() == 2, "oracle integral space");
  }
  o.require(r.normal_basis == Decision::Yes, "normal basis");
  for (const char* th : {"main", "x-case"}) {
    const ClauseTable* t = table(r, th);
    o.require(t != nullptr, std::string(th) + " table missing");
    if (t)
      for (const auto& c : t->clauses)
        if (c.grounded) o.require(c.value == true, std::string(th) + " clause " + c.id);
  }
  o.require(r.consistency_failures.empty(), "consistency failures");
  return o;
}

Outcome fix_n() {
  Outcome o;
  const Instance inst = builtin_fixture("FIX-N");
  const oracle::Raw raw = to_raw(inst.data);
  AnalysisReport r = analyze(inst);
  o.require(oracle::beta_rank_over_ground(raw) < raw.n * raw.m && !r.flags.at("galois"), "beta not surjective");
  o.require(!r.flags.at("F_surjective"), "F not surjective");
  o.require(r.qhat && *r.qhat == Matrix::from_ints(kQ, {{0, 1}}), "q-hat = delta_g");
  const auto ints = oracle::integrals(raw);
  bool total = false;
  for (const auto& v : ints) total = total || oracle::at_x(raw, v) != oracle::Vec(raw.n, 0);
  o.require(total, "total integral exists (oracle)");
  o.require(r.cleft == Decision::No && r.cleft_certificate.rfind("determinant identically zero", 0) == 0,
            "cleft = false, certified: " + r.cleft_certificate);
  o.require(r.normal_basis == Decision::No && r.normal_basis_certificate == "dimension obstruction", "normal basis false by dimension");
  const ClauseTable* main = table(r, "main");
  o.require(main != nullptr, "main table missing");
  if (main)
    for (const auto& c : main->clauses)
      if (c.grounded) o.require(c.value == false, "main clause " + c.id);
  const ClauseTable* surj = table(r, "surj");
  o.require(surj != nullptr, "surj table missing");
  if (surj)
    for (const auto& c : surj->clauses)
      if (c.grounded) o.require(c.value == true, "surj clause " + c.id);
  return o;
}

Outcome coq_and_psi_tilde() {
  Outcome o;
  for (const char* name : {"FIX-T", "FIX-H", "FIX-S"}) {
    Context ctx = make_context(builtin_fixture(name).data);
    MoritaContext mc = build_context(ctx);
    auto w = witness_family(ctx, 2, 0);
    StructureVerdict sv = structure_report(ctx, mc, w);
    CleftReport rep = check_theorem_main(ctx, mc, sv, w);
    o.require(rep.cleft.witness.has_value(), std::string(name) + " has no cleft witness");
    o.require(rep.coq && rep.coq->biconditional && rep.coq->lambda_colinear && rep.coq->lambda_bar_in_q,
              std::string(name) + " co-Q biconditional");
    o.require(!rep.psi_tilde.empty(), std::string(name) + " no Psi-tilde checks");
    for (const auto& [wn, ok] : rep.psi_tilde) o.require(ok, std::string(name) + " Psi-tilde on " + wn);
  }
  return o;
}

Outcome exact_linear_algebra() {
  Outcome o;
  std::mt19937_64 rng(2024);
  for (const Field& f : {Field::rationals(), Field::prime(5)}) {
    for (int t = 0; t < 1000; ++t) {
      const std::size_t r = 1 + rng() % 7, c = 1 + rng() % 7;
      Matrix m = coringlab::testing::random_matrix(f, r, c, rng);
      const std::size_t rk = rank(m);
      Subspace k = kernel(m);
      o.require(rk + k.dim() == c, "rank-nullity over " + f.name());
      bool kills = true;
      for (const auto& v : k.vectors()) kills = kills && is_zero(m * v);
      o.require(kills, "kernel vectors over " + f.name());
      Matrix p = coringlab::testing::random_invertible(f, r, rng);
      o.require(echelon(p * m).reduced == echelon(m).reduced, "canonical form over " + f.name());
      Subspace rel = image(m.transpose());
      QuotientSpace q = quotient(c, rel);
      bool proj_kills = true;
      for (const auto& v : rel.vectors()) proj_kills = proj_kills && is_zero(q.project(v));
      o.require(q.dim() == c - rk && (q.projection * q.section).is_identity() && proj_kills,
                "quotient identities over " + f.name());
    }
  }
  if (o.pass) o.detail = "1000 matrices per field (Q, F_5)";
  return o;
}

std::string run_cli(const std::string& args) {
  std::string out;
  FILE* pipe = popen((std::string(CORING_LAB_CLI) + " " + args + " 2>/dev/null").c_str(), "r");
  if (!pipe) return out;
  char buf[4096];
  for (std::size_t n; (n = fread(buf, 1, sizeof buf, pipe)) > 0;) out.append(buf, n);
  pclose(pipe);
  return out;
}

Outcome determinism() {
  Outcome o;
  for (const auto& name : fixture_names()) {
    const std::string path = std::string(CORINGLAB_FIXTURE_DIR) + "/" + fixture_file(name) + ".json";
    const std::string a = run_cli("analyze " + path + " --format json --seed 7");
    const std::string b = run_cli("analyze " + path + " --format json --seed 7");
    o.require(!a.empty() && a == b, name + " reports differ");
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "axiom suites name violated axioms on mutations", 1000, axiom_suites},
      {2, "Morita context bilinearity and associativity", 0, morita_integrity},
      {3, "surjectivity theorem clauses agree", 10000, surj_agreement},
      {4, "C-finite theorem clauses agree", 0, cfinite_agreement},
      {5, "FIX-H headline values", 0, fix_h},
      {6, "FIX-N headline values", 0, fix_n},
      {7, "co-Q biconditional and Psi-tilde inverse on cleft fixtures", 0, coq_and_psi_tilde},
      {8, "exact linear algebra identities", 5000, exact_linear_algebra},
      {9, "analyze is deterministic for a fixed seed", 0, determinism},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_ms > 0 && ms > c.limit_ms) {
      if (o.pass) o.detail = "over the time limit";
      o.pass = false;
    }
    failures += !o.pass;
    char time[64];
    if (c.limit_ms > 0)
      std::snprintf(time, sizeof time, "%.0f ms, limit %.0f ms", ms, c.limit_ms);
    else
      std::snprintf(time, sizeof time, "%.0f ms", ms);
    std::cout << "criterion " << c.id << " " << (o.pass ? "PASS" : "FAIL") << " " << c.description << " (" << time << ")"
              << (o.detail.empty() ? "" : ": " + o.detail) << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
