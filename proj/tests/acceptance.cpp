// One line per acceptance criterion; exit status 0 iff none failed.
#include <iostream>

#include "bel/suite.hpp"

int main() {
  const auto results = bel::run_suite(bel::acceptance_criteria(), bel::SuiteOptions{}, &std::cout);
  return bel::suite_passed(results) ? 0 : 1;
}
