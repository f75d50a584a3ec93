// Prints one line per acceptance criterion; exits non-zero if any fails.
#include "qcgl/random_elements.hpp"
#include "qcgl/verify.hpp"

#include <iostream>

int main() {
  qcgl::SuiteOptions opts;
  opts.seed = qcgl::default_seed(opts.seed);
  int failed = 0;
  for (const auto& r : qcgl::run_acceptance_suite(opts)) {
    std::cout << qcgl::format_result(r) << "\n";
    for (const auto& d : r.details) std::cout << "    " << d << "\n";
    if (!r.passed) ++failed;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
