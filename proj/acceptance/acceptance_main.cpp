// Runs every acceptance criterion with the built-in limits and frozen
// expectations, one line per criterion. Exit status 1 if any fails.

#include <cstring>
#include <iostream>

#include "heckecentre/acceptance.hpp"

int main(int argc, char** argv) {
  const hc::Expectations expect = hc::default_expectations();
  if (argc > 1 && std::strcmp(argv[1], "--dump-expectations") == 0) {
    std::cout << "{\n";
    std::size_t i = 0;
    for (const auto& [k, v] : expect) std::cout << "  \"" << k << "\": \"" << v << "\"" << (++i < expect.size() ? ",\n" : "\n");
    std::cout << "}\n";
    return 0;
  }
  int failed = 0;
  for (int id = 1; id <= hc::kCriteriaCount; ++id) {
    const auto r = hc::run_criterion(id, hc::AcceptanceLimits{}, expect);
    std::cout << hc::format_result(r) << std::endl;
    if (!r.pass) ++failed;
  }
  std::cout << (failed ? "FAILED " : "ALL PASSED ") << hc::kCriteriaCount - failed << "/" << hc::kCriteriaCount << '\n';
  return failed ? 1 : 0;
}
