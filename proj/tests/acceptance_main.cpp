// Runs the acceptance criteria at the full level and prints one line each.
#include <iostream>

#include "liegeo/io.hpp"
#include "liegeo/random.hpp"
#include "liegeo_cli/acceptance.hpp"

int main() {
  const liegeo::Report r = liegeo::cli::run_acceptance(liegeo::cli::SuiteLevel::full, liegeo::default_seed());
  int failed = 0;
  for (const auto& it : r.items) {
    const bool pass = it.verdict == "pass";
    failed += !pass;
    std::cout << (pass ? "PASS " : "FAIL ") << it.name << " (" << it.elapsed << " s)";
    if (!it.detail.empty()) std::cout << ": " << it.detail;
    std::cout << "\n";
  }
  std::cout << r.items.size() - failed << "/" << r.items.size() << " criteria passed in " << r.elapsed << " s\n";
  return failed == 0 ? 0 : 1;
}
