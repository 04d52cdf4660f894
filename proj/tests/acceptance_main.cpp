#include <cstdlib>
#include <iostream>

#include "hrep/suites/acceptance.hpp"

int main(int argc, char** argv) {
  const std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : hrep::suites::kDefaultSeed;
  bool all = true;
  for (const auto& c : hrep::suites::criteria()) {
    const auto r = hrep::suites::run_criterion(c, seed);
    std::cout << hrep::suites::summary_line(r) << std::endl;
    all = all && r.pass;
  }
  std::cout << (all ? "all acceptance criteria pass" : "some acceptance criteria FAIL") << std::endl;
  return all ? EXIT_SUCCESS : EXIT_FAILURE;
}
