// Runs every acceptance criterion once and prints one line per criterion.
#include <cstdio>
#include <exception>
#include <iostream>

#include "braidlab/ledger.hpp"

int main() {
  using namespace braidlab;
  LedgerOptions options;
  options.filter = "criterion.*";
  std::vector<CheckResult> results;
  try {
    results = run_ledger(options);
  } catch (const std::exception& e) {
    std::cerr << "acceptance run aborted: " << e.what() << "\n";
    return 2;
  }
  int failed = 0;
  for (const auto& r : results) {
    const bool ok = r.status == CheckStatus::Pass;
    failed += !ok;
    std::cout << (ok ? "PASS " : "FAIL ") << r.id << ": " << r.details;
    if (!ok && !r.counterexample.empty()) std::cout << " | counterexample: " << r.counterexample;
    std::cout << "\n";
  }
  std::cout << (results.size() - static_cast<std::size_t>(failed)) << "/" << results.size()
            << " acceptance criteria passed\n";
  return failed == 0 ? 0 : 1;
}
