#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "coringlab/report.hpp"

using namespace coringlab;

namespace {

enum Exit { kOk = 0, kParse = 1, kAxiom = 2, kAssert = 3, kInconsistent = 4 };

std::uint64_t resolve_seed(const CLI::Option* flag, std::uint64_t value) {
  if (flag->count() > 0) return value;
  if (const char* env = std::getenv("CORING_LAB_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "coring-lab: ignoring malformed CORING_LAB_SEED\n";
    }
  }
  return 0;
}

void print_axiom_failures(const AxiomFailures& a) {
  for (const auto& [name, failures] : a) {
    for (const auto& f : failures) std::cerr << name << ": " << f << "\n";
  }
}

int cmd_verify(const std::string& path) {
  Instance inst;
  try {
    inst = load_instance(path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  }
  AxiomFailures a = verify_instance(inst);
  if (!axioms_ok(a)) {
    print_axiom_failures(a);
    return kAxiom;
  }
  std::cout << path << ": valid\n";
  return kOk;
}

int cmd_analyze(const std::string& path, const AnalyzeOptions& opt, const std::string& format,
                const std::vector<std::string>& asserts) {
  Instance inst;
  try {
    inst = load_instance(path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  }
  std::cerr << "coring-lab: seed " << opt.seed << "\n";
  AnalysisReport r = analyze(inst, opt);
  std::cout << (format == "json" ? dump(report_to_json(r)) : report_to_text(r));
  if (!axioms_ok(r.axioms)) {
    print_axiom_failures(r.axioms);
    return kAxiom;
  }
  const json j = report_to_json(r);
  int code = kOk;
  for (const auto& a : asserts) {
    const auto eq = a.find('=');
    if (eq == std::string::npos) {
      std::cerr << "assert '" << a << "': expected key=value\n";
      code = kAssert;
      continue;
    }
    const std::string key = a.substr(0, eq);
    const std::string want = a.substr(eq + 1);
    const auto got = report_value(j, key);
    if (!got) {
      std::cerr << "assert " << key << ": no such key\n";
      code = kAssert;
    } else if (*got != want) {
      std::cerr << "assert " << key << ": expected " << want << ", got " << *got << "\n";
      code = kAssert;
    }
  }
  if (!r.consistency_failures.empty()) {
    for (const auto& f : r.consistency_failures) std::cerr << "inconsistent: " << f << "\n";
    return kInconsistent;
  }
  return code;
}

int cmd_report(std::vector<std::string> paths, const AnalyzeOptions& opt, const std::string& format) {
  std::sort(paths.begin(), paths.end());
  static const std::vector<std::string> columns = {"galois", "cleft", "normal_basis", "weak", "strong", "B_dim", "Q_dim"};
  std::vector<json> rows(paths.size());
  const auto count = static_cast<std::ptrdiff_t>(paths.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const auto k = static_cast<std::size_t>(i);
    json row = {{"path", paths[k]}};
    try {
      Instance inst = load_instance(paths[k]);
      AnalysisReport r = analyze(inst, opt);
      row["name"] = r.name;
      if (!axioms_ok(r.axioms)) {
        row["status"] = "axiom failure";
      } else {
        const json j = report_to_json(r);
        row["status"] = r.consistency_failures.empty() ? "ok" : "inconsistent";
        for (const auto& c : columns) row[c] = j.at("summary").at(c);
      }
    } catch (const std::exception& e) {
      row["status"] = "error";
      row["error"] = e.what();
    }
    rows[k] = std::move(row);
  }
  int code = kOk;
  for (const auto& row : rows) {
    if (row.at("status") != "ok") code = kParse;
  }
  if (format == "json") {
    std::cout << dump(json{{"rows", rows}});
    return code;
  }
  std::cout << "path\tname\tstatus";
  for (const auto& c : columns) std::cout << "\t" << c;
  std::cout << "\n";
  for (const auto& row : rows) {
    std::cout << row.at("path").get<std::string>() << "\t" << row.value("name", std::string("-")) << "\t"
              << row.at("status").get<std::string>();
    for (const auto& c : columns) {
      if (!row.contains(c)) {
        std::cout << "\t-";
      } else {
        const json& v = row.at(c);
        std::cout << "\t" << (v.is_string() ? v.get<std::string>() : v.dump());
      }
    }
    std::cout << "\n";
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with entwining structures, corings and their Morita contexts"};
  app.name("coring-lab");
  app.require_subcommand(1);

  std::string path;
  auto* verify = app.add_subcommand("verify", "Check every axiom of an instance");
  verify->add_option("path", path, "instance JSON")->required();

  std::string format = "text";
  std::size_t witnesses = 2;
  std::uint64_t seed = 0;
  bool timing = false;
  std::vector<std::string> asserts;
  auto* analyze_cmd = app.add_subcommand("analyze", "Run the full analysis of an instance");
  analyze_cmd->add_option("path", path, "instance JSON")->required();
  analyze_cmd->add_option("--witnesses", witnesses, "number of random kernel comodules in the witness family");
  analyze_cmd->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  analyze_cmd->add_option("--assert", asserts, "key=value checked against the report");
  auto* analyze_seed = analyze_cmd->add_option("--seed", seed, "seed for the randomized searches (default $CORING_LAB_SEED or 0)");
  analyze_cmd->add_flag("--timing", timing, "include wall-clock time in the report");

  std::vector<std::string> paths;
  auto* report = app.add_subcommand("report", "One row of headline verdicts per instance");
  report->add_option("paths", paths, "instance JSON files");
  report->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  report->add_option("--witnesses", witnesses, "number of random kernel comodules in the witness family");
  auto* report_seed = report->add_option("--seed", seed, "seed for the randomized searches");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kParse;
  }

  if (verify->parsed()) return cmd_verify(path);
  if (analyze_cmd->parsed()) {
    AnalyzeOptions opt{resolve_seed(analyze_seed, seed), witnesses, timing};
    return cmd_analyze(path, opt, format, asserts);
  }
  AnalyzeOptions opt{resolve_seed(report_seed, seed), witnesses, false};
  return cmd_report(paths, opt, format);
}
