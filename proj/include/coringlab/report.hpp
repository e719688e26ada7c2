#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coringlab/cleft.hpp"
#include "coringlab/io.hpp"

namespace coringlab {

/// Axiom failures per verifier; an empty list means the check passed.
using AxiomFailures = std::map<std::string, std::vector<std::string>>;

/// algebra, coalgebra, bialgebra and comodule algebra (Doi-Koppinen input
/// only), entwining, then coring, sharp ring, group-like and A as a comodule
/// once the entwining holds.
AxiomFailures verify_instance(const Instance& inst);
bool axioms_ok(const AxiomFailures& a);

struct AnalyzeOptions {
  std::uint64_t seed = 0;
  std::size_t kernel_witnesses = 2;
  bool timing = false;
};

struct WitnessRow {
  WitnessRecord record;
  std::optional<bool> gamma;      // only with a cleft witness
  std::optional<bool> psi_tilde;  // likewise
  friend bool operator==(const WitnessRow&, const WitnessRow&) = default;
};

struct AnalysisReport {
  std::string name;
  std::string digest;
  std::string field;
  std::uint64_t seed = 0;
  std::size_t kernel_witnesses = 0;
  AxiomFailures axioms;
  std::map<std::string, std::size_t> dims;  // A, C, coring, dual, B, Q
  std::map<std::string, bool> flags;
  Decision cleft = Decision::Inconclusive;
  Decision normal_basis = Decision::Inconclusive;
  std::string cleft_certificate;
  std::string normal_basis_certificate;
  std::optional<Matrix> lambda;
  std::optional<Matrix> lambda_bar;
  std::optional<Matrix> normal_basis_map;
  std::optional<Matrix> qhat;
  std::vector<WitnessRow> witnesses;
  std::vector<ClauseTable> theorems;
  std::vector<std::string> consistency_failures;
  std::optional<double> elapsed_ms;

  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

/// Runs the whole pipeline; stops after the axioms when they fail.
AnalysisReport analyze(const Instance& inst, const AnalyzeOptions& opt = {});

json report_to_json(const AnalysisReport& r);
AnalysisReport report_from_json(const json& j);
/// "path: value" lines carrying the same content as the JSON form.
std::string report_to_text(const AnalysisReport& r);

/// Looks `key` up in the summary, then as a dotted path; values compare by
/// their JSON text with string quotes dropped.
std::optional<std::string> report_value(const json& report, const std::string& key);

/// SHA-256 of the canonical instance JSON.
std::string instance_digest(const Instance& inst);

/// A fixture: instance file plus the frozen expected values.
struct Fixture {
  std::string name;
  Instance instance;
  json expected;
};
std::string fixture_file(const std::string& name);
Fixture fixture(const std::string& name, const std::string& dir = CORINGLAB_FIXTURE_DIR);
/// Summary and theorem clause values of a report, in the fixture format.
json expected_values(const AnalysisReport& r);

}  // namespace coringlab
