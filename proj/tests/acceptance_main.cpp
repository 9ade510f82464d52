// Runs the fourteen acceptance criteria, one line each.
#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <string>

#include "triorb/acceptance.hpp"

int main(int argc, char** argv) {
  triorb::AcceptanceOptions options;
  for (int i = 1; i < argc; ++i) options.only.push_back(std::atoi(argv[i]));
  std::cout << std::unitbuf;
  std::vector<triorb::CriterionResult> results;
  for (int id = 1; id <= 14; ++id) {
    if (!options.only.empty() && std::find(options.only.begin(), options.only.end(), id) == options.only.end()) {
      continue;
    }
    triorb::AcceptanceOptions one = options;
    one.only = {id};
    for (auto& r : triorb::run_acceptance(one)) {
      std::cout << triorb::format_result(r) << "\n";
      results.push_back(std::move(r));
    }
  }
  return triorb::acceptance_exit_code(results);
}
