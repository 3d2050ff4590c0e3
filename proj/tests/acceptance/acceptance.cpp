// Acceptance suite: one PASS/FAIL line per criterion; exit status 1 on any failure.
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>

#include "hermsig_verify/verify.hpp"

int main(int argc, char** argv) {
  hermsig::verify::SuiteOptions options;
  if (argc > 1) options.seed = std::strtoull(argv[1], nullptr, 10);
  bool all = true;
  const auto start = std::chrono::steady_clock::now();
  for (const auto& criterion : hermsig::verify::criteria()) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto r = criterion(options);
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
    std::cout << (r.passed ? "PASS" : "FAIL") << "  [" << r.id << "] " << r.name << " (" << ms.count() << " ms): "
              << r.detail << std::endl;
    all = all && r.passed;
  }
  const auto total = std::chrono::duration_cast<std::chrono::seconds>(std::chrono::steady_clock::now() - start);
  std::cout << (all ? "ALL PASS" : "SOME FAILED") << " in " << total.count() << " s" << std::endl;
  return all ? 0 : 1;
}
