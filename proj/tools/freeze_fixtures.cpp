#include <filesystem>
#include <fstream>
#include <iostream>

#include "coringlab/report.hpp"

using namespace coringlab;

int main(int argc, char** argv) {
  const std::string dir = argc > 1 ? argv[1] : CORINGLAB_FIXTURE_DIR;
  std::filesystem::create_directories(dir + "/expected");
  for (const auto& name : fixture_names()) {
    Instance inst = builtin_fixture(name);
    const std::string file = fixture_file(name) + ".json";
    std::ofstream(dir + "/" + file) << dump(instance_to_json(inst));
    AnalysisReport r = analyze(inst);
    if (!r.consistency_failures.empty()) {
      std::cerr << name << ": " << r.consistency_failures.front() << "\n";
      return 1;
    }
    std::ofstream(dir + "/expected/" + file) << dump(expected_values(r));
    std::cout << "wrote " << file << " and expected/" << file << "\n";
  }
  return 0;
}
