#include <cstring>
#include <iostream>

#include "trigzeros/acceptance.hpp"

int main(int argc, char** argv) {
  trigzeros::AcceptanceOptions options;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--quick") == 0) options.quick = true;
  }
  int failed = 0;
  trigzeros::run_acceptance(options, [&](const trigzeros::CriterionResult& c) {
    if (!c.passed) ++failed;
    std::cout << (c.passed ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.name
              << "): " << c.detail << std::endl;
  });
  std::cout << (failed == 0 ? "all criteria passed" : "some criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
