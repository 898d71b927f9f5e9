// Reads a JSON report and checks that re-serializing it reproduces the input.

#include <fstream>
#include <iostream>

#include "tornheim/verify.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: report_roundtrip report.json\n";
    return 2;
  }
  std::ifstream in(argv[1]);
  const nlohmann::json original = nlohmann::json::parse(in);
  const auto report = tornheim::report_from_json(original);
  const nlohmann::json again = tornheim::to_json(report);
  if (again != original || again.dump(2) != original.dump(2)) {
    std::cerr << "mismatch\n";
    return 1;
  }
  std::cout << report.cases.size() << " cases round-tripped\n";
  return 0;
}
