#include "coringlab/report.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cctype>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace coringlab {

namespace {

void record(AxiomFailures& out, const std::string& name, const Verdict& v) { out[name] = v.failures; }

json decision_to_json(Decision d) {
  if (d == Decision::Inconclusive) return "inconclusive";
  return d == Decision::Yes;
}

Decision decision_from_json(const json& j) {
  if (j.is_boolean()) return j.get<bool>() ? Decision::Yes : Decision::No;
  if (j == "inconclusive") return Decision::Inconclusive;
  throw ParseError("decision must be true, false or \"inconclusive\"");
}

json optional_matrix(const std::optional<Matrix>& m) { return m ? matrix_to_json(*m) : json(nullptr); }

std::optional<Matrix> optional_matrix_from(const Field& f, const json& j) {
  if (j.is_null()) return std::nullopt;
  return matrix_from_json(f, j);
}

json optional_bool(const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); }

std::optional<bool> optional_bool_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<bool>();
}

json table_to_json(const ClauseTable& t) {
  json clauses = json::object();
  json details = json::array();
  json ungrounded = json::array();
  for (const auto& c : t.clauses) {
    clauses[c.id] = optional_bool(c.value);
    details.push_back({{"id", c.id}, {"value", optional_bool(c.value)}, {"grounded", c.grounded}, {"note", c.note}});
    if (!c.grounded) ungrounded.push_back(c.id);
  }
  return {{"theorem", t.theorem}, {"clauses", clauses}, {"details", details}, {"ungrounded", ungrounded},
          {"notes", t.notes}, {"agreement", t.agreement()}};
}

ClauseTable table_from_json(const json& j) {
  ClauseTable t;
  t.theorem = j.at("theorem").get<std::string>();
  for (const auto& d : j.at("details")) {
    t.clauses.push_back(Clause{d.at("id").get<std::string>(), optional_bool_from(d.at("value")), d.at("grounded").get<bool>(),
                               d.at("note").get<std::string>()});
  }
  t.notes = j.at("notes").get<std::vector<std::string>>();
  return t;
}

void flatten(const json& j, const std::string& path, std::ostringstream& out) {
  const bool leaf_array = j.is_array() && std::none_of(j.begin(), j.end(), [](const json& e) { return e.is_object(); });
  if (j.is_object() && !j.empty()) {
    for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), out);
  } else if (j.is_array() && !leaf_array) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", out);
  } else {
    out << path << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

}  // namespace

bool axioms_ok(const AxiomFailures& a) {
  return std::all_of(a.begin(), a.end(), [](const auto& kv) { return kv.second.empty(); });
}

AxiomFailures verify_instance(const Instance& inst) {
  AxiomFailures out;
  const EntwiningData& e = inst.data;
  record(out, "algebra", verify_algebra(*e.algebra));
  record(out, "coalgebra", verify_coalgebra(e.coalgebra));
  if (inst.doi_koppinen) {
    record(out, "bialgebra", verify_bialgebra(*inst.bialgebra, e.coalgebra));
    record(out, "comodule_algebra", verify_comodule_algebra(*e.algebra, *inst.bialgebra, e.coalgebra, inst.coaction));
  }
  if (!axioms_ok(out)) return out;
  record(out, "entwining", verify_entwining(e.algebra, e.coalgebra, e.psi));
  if (!axioms_ok(out)) return out;
  try {
    Context ctx = make_context(e);
    record(out, "coring", verify_coring(ctx.coring));
    Verdict sharp = verify_algebra(*ctx.sharp);
    sharp.merge(verify_sharp_iso(ctx));
    record(out, "sharp_ring", sharp);
    Verdict g;
    if (!is_grouplike(ctx.coring, ctx.x)) g.fail("unit coaction is not group-like in the coring");
    record(out, "group_like", g);
    record(out, "algebra_comodule", verify_comodule(ctx, algebra_comodule(ctx)));
  } catch (const ShapeError& err) {
    out["sharp_ring"] = {err.what()};
  }
  return out;
}

AnalysisReport analyze(const Instance& inst, const AnalyzeOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  AnalysisReport r;
  r.name = inst.name;
  r.digest = instance_digest(inst);
  r.field = inst.data.algebra->field().name();
  r.seed = opt.seed;
  r.kernel_witnesses = opt.kernel_witnesses;
  r.axioms = verify_instance(inst);
  if (!axioms_ok(r.axioms)) return r;

  Context ctx = make_context(inst.data);
  MoritaContext mc = build_context(ctx);
  std::vector<Comodule> witnesses = witness_family(ctx, opt.kernel_witnesses, opt.seed);
  StructureVerdict sv = structure_report(ctx, mc, witnesses);
  ClauseTable surj = check_theorem_surj(ctx, mc, witnesses);
  ClauseTable cfin = check_theorem_Cfinite(ctx, mc, witnesses);
  SearchOptions so;
  so.seed = opt.seed;
  CleftReport cr = check_theorem_main(ctx, mc, sv, witnesses, so);

  r.dims = {{"A", ctx.n}, {"C", ctx.m}, {"coring", ctx.d}, {"dual", ctx.sharp->dim()}, {"B", mc.b.ring->dim()}, {"Q", mc.q.dim()}};
  r.qhat = find_qhat(ctx, mc);
  r.flags = {{"morita_context", mc.verdict.ok()},
             {"qhat_exists", r.qhat.has_value()},
             {"F_surjective", classify(mc.f).surjective},
             {"G_surjective", classify(mc.g).surjective},
             {"galois", sv.galois},
             {"weak", sv.weak},
             {"strong", sv.strong},
             {"flat", sv.flat},
             {"faithfully_flat", sv.faithfully_flat},
             {"phi_witnesses", sv.phi_witnesses},
             {"x_case", cr.x_case.has_value()}};
  r.cleft = cr.cleft.status;
  r.cleft_certificate = cr.cleft.certificate;
  r.normal_basis = cr.normal_basis.status;
  r.normal_basis_certificate = cr.normal_basis.certificate;
  if (cr.cleft.witness) {
    r.lambda = cr.cleft.witness->lambda;
    r.lambda_bar = cr.cleft.witness->lambda_bar;
  }
  r.normal_basis_map = cr.normal_basis.witness;
  for (std::size_t i = 0; i < sv.witnesses.size(); ++i) {
    WitnessRow row{sv.witnesses[i], std::nullopt, std::nullopt};
    if (i < cr.gamma.size()) row.gamma = cr.gamma[i].second;
    if (i < cr.psi_tilde.size()) row.psi_tilde = cr.psi_tilde[i].second;
    r.witnesses.push_back(std::move(row));
  }
  r.theorems = {surj, cfin, sv.fin_gen, sv.fin_prog, cr.main};
  if (cr.xcase) r.theorems.push_back(*cr.xcase);

  auto& bad = r.consistency_failures;
  for (const auto& t : r.theorems) {
    if (!t.agreement()) bad.push_back("clause disagreement in " + t.theorem);
  }
  bad.insert(bad.end(), sv.implication_failures.begin(), sv.implication_failures.end());
  for (const auto& f : mc.verdict.failures) bad.push_back("Morita context: " + f);
  for (const auto& f : mc.b.verdict.failures) bad.push_back("coinvariant subring: " + f);
  if (cr.coq) {
    if (!cr.coq->biconditional) bad.push_back("lambda colinear and lambda_bar in Q disagree");
    if (cr.coq->lambda_hat && !(cr.coq->lambda_hat_in_q && cr.coq->lambda_hat_normalised)) {
      bad.push_back("lambda_hat is not a normalised element of Q");
    }
  }
  for (const auto& row : r.witnesses) {
    if (row.gamma == false) bad.push_back("gamma_M is not an isomorphism on " + row.record.name);
    if (row.psi_tilde == false) bad.push_back("Psi~_M does not invert Psi_M on " + row.record.name);
  }
  if (opt.timing) {
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  return r;
}

json report_to_json(const AnalysisReport& r) {
  json j;
  j["instance"] = {{"name", r.name}, {"digest", r.digest}, {"field", r.field}};
  j["seed"] = r.seed;
  j["witness_kernels"] = r.kernel_witnesses;
  j["axioms"] = r.axioms;
  json summary = json::object();
  for (const auto& [k, v] : r.dims) summary[k + "_dim"] = v;
  for (const auto& [k, v] : r.flags) summary[k] = v;
  if (axioms_ok(r.axioms)) {
    summary["cleft"] = decision_to_json(r.cleft);
    summary["normal_basis"] = decision_to_json(r.normal_basis);
    j["cleft"] = {{"cleft", decision_to_json(r.cleft)},
                  {"certificate", r.cleft_certificate},
                  {"lambda", optional_matrix(r.lambda)},
                  {"lambda_bar", optional_matrix(r.lambda_bar)},
                  {"normal_basis", decision_to_json(r.normal_basis)},
                  {"normal_basis_certificate", r.normal_basis_certificate},
                  {"normal_basis_map", optional_matrix(r.normal_basis_map)}};
    j["qhat"] = optional_matrix(r.qhat);
  }
  j["summary"] = summary;
  json witnesses = json::array();
  for (const auto& w : r.witnesses) {
    witnesses.push_back({{"name", w.record.name},
                         {"dim", w.record.dim},
                         {"psi", w.record.psi},
                         {"psi_prime", w.record.psi_prime},
                         {"xi", w.record.xi},
                         {"coinvariants_match", w.record.coinvariants_match},
                         {"gamma", optional_bool(w.gamma)},
                         {"psi_tilde", optional_bool(w.psi_tilde)}});
  }
  j["witnesses"] = witnesses;
  json theorems = json::object();
  for (const auto& t : r.theorems) theorems[t.theorem] = table_to_json(t);
  j["theorems"] = theorems;
  j["consistency_failures"] = r.consistency_failures;
  if (r.elapsed_ms) j["timing_ms"] = *r.elapsed_ms;
  return j;
}

AnalysisReport report_from_json(const json& j) {
  try {
    AnalysisReport r;
    r.name = j.at("instance").at("name").get<std::string>();
    r.digest = j.at("instance").at("digest").get<std::string>();
    r.field = j.at("instance").at("field").get<std::string>();
    const Field f = field_from_json(r.field);
    r.seed = j.at("seed").get<std::uint64_t>();
    r.kernel_witnesses = j.at("witness_kernels").get<std::size_t>();
    r.axioms = j.at("axioms").get<AxiomFailures>();
    for (auto it = j.at("summary").begin(); it != j.at("summary").end(); ++it) {
      const std::string& k = it.key();
      if (k == "cleft" || k == "normal_basis") continue;
      if (k.size() > 4 && k.ends_with("_dim")) {
        r.dims[k.substr(0, k.size() - 4)] = it.value().get<std::size_t>();
      } else {
        r.flags[k] = it.value().get<bool>();
      }
    }
    if (j.contains("cleft")) {
      const json& c = j.at("cleft");
      r.cleft = decision_from_json(c.at("cleft"));
      r.cleft_certificate = c.at("certificate").get<std::string>();
      r.lambda = optional_matrix_from(f, c.at("lambda"));
      r.lambda_bar = optional_matrix_from(f, c.at("lambda_bar"));
      r.normal_basis = decision_from_json(c.at("normal_basis"));
      r.normal_basis_certificate = c.at("normal_basis_certificate").get<std::string>();
      r.normal_basis_map = optional_matrix_from(f, c.at("normal_basis_map"));
      r.qhat = optional_matrix_from(f, j.at("qhat"));
    }
    for (const auto& w : j.at("witnesses")) {
      WitnessRow row;
      row.record.name = w.at("name").get<std::string>();
      row.record.dim = w.at("dim").get<std::size_t>();
      row.record.psi = w.at("psi").get<bool>();
      row.record.psi_prime = w.at("psi_prime").get<bool>();
      row.record.xi = w.at("xi").get<bool>();
      row.record.coinvariants_match = w.at("coinvariants_match").get<bool>();
      row.gamma = optional_bool_from(w.at("gamma"));
      row.psi_tilde = optional_bool_from(w.at("psi_tilde"));
      r.witnesses.push_back(std::move(row));
    }
    static const std::vector<std::string> order = {"surj", "C-finite", "fin-gen", "fin-prog", "main", "x-case"};
    const json& th = j.at("theorems");
    for (const auto& name : order) {
      if (th.contains(name)) r.theorems.push_back(table_from_json(th.at(name)));
    }
    r.consistency_failures = j.at("consistency_failures").get<std::vector<std::string>>();
    if (j.contains("timing_ms")) r.elapsed_ms = j.at("timing_ms").get<double>();
    return r;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed report: ") + e.what());
  }
}

std::string report_to_text(const AnalysisReport& r) {
  std::ostringstream out;
  flatten(report_to_json(r), "", out);
  return out.str();
}

std::optional<std::string> report_value(const json& report, const std::string& key) {
  const json* v = nullptr;
  if (report.contains("summary") && report.at("summary").contains(key)) {
    v = &report.at("summary").at(key);
  } else {
    std::string pointer;
    std::stringstream parts(key);
    for (std::string part; std::getline(parts, part, '.');) pointer += "/" + part;
    try {
      v = &report.at(json::json_pointer(pointer));
    } catch (const json::exception&) {
      return std::nullopt;
    }
  }
  return v->is_string() ? v->get<std::string>() : v->dump();
}

std::string instance_digest(const Instance& inst) {
  const std::string text = instance_to_json(inst).dump();
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(text.data(), text.size(), md, &len, EVP_sha256(), nullptr);
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return hex.str();
}

std::string fixture_file(const std::string& name) {
  std::string s = name;
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

Fixture fixture(const std::string& name, const std::string& dir) {
  const auto names = fixture_names();
  if (std::find(names.begin(), names.end(), name) == names.end()) throw std::invalid_argument("unknown fixture: " + name);
  Fixture fx;
  fx.name = name;
  fx.instance = load_instance(dir + "/" + fixture_file(name) + ".json");
  std::ifstream in(dir + "/expected/" + fixture_file(name) + ".json");
  if (!in) throw ParseError("missing expected values for " + name);
  fx.expected = json::parse(in);
  return fx;
}

json expected_values(const AnalysisReport& r) {
  json full = report_to_json(r);
  json theorems = json::object();
  for (const auto& t : r.theorems) theorems[t.theorem] = full.at("theorems").at(t.theorem).at("clauses");
  return {{"name", r.name}, {"summary", full.at("summary")}, {"theorems", theorems}};
}

}  // namespace coringlab
