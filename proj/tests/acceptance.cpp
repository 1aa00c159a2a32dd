// Acceptance runner: one line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cstdio>
#include <exception>
#include <string>

#include "lia/acceptance.hpp"

int main() {
  lia::AcceptanceConfig cfg;
  int failed = 0;
  for (const auto& crit : lia::acceptance_criteria()) {
    auto start = std::chrono::steady_clock::now();
    std::string verdict, detail;
    try {
      lia::Report r = crit.run(cfg);
      if (r.ok()) {
        verdict = "PASS";
      } else {
        verdict = "FAIL";
        const lia::Check* f = r.first_failure();
        detail = f->id + (f->witness.empty() ? "" : " [" + f->witness + "]");
        ++failed;
      }
    } catch (const std::exception& e) {
      verdict = "FAIL";
      detail = std::string("exception: ") + e.what();
      ++failed;
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    std::printf("%-4s %-14s (%lld ms)%s%s\n", verdict.c_str(), crit.name.c_str(),
                static_cast<long long>(ms), detail.empty() ? "" : "  ",
                detail.c_str());
  }
  if (failed) std::printf("acceptance: %d criterion(s) failed\n", failed);
  else std::printf("acceptance: all criteria passed\n");
  return failed ? 1 : 0;
}
