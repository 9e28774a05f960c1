#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace braidlab {

enum class CheckStatus { Pass, Fail, Skipped };
std::string to_string(CheckStatus s);

struct CheckResult {
  std::string id;
  CheckStatus status = CheckStatus::Skipped;
  std::string details;
  std::string counterexample;  // set for failed checks
  double elapsed_ms = 0;
};

inline constexpr std::uint64_t kDefaultLedgerSeed = 20240521;

struct LedgerOptions {
  // Exact id, a dot-separated id prefix ("criterion.07" or "k4-action"),
  // or a shell glob ("criterion.*").
  std::optional<std::string> filter;
  std::uint64_t seed = kDefaultLedgerSeed;
  // Replacement text for the B'4 presentation (fault injection).
  std::optional<std::string> b4prime_presentation;
  int threads = 1;
};

std::vector<std::string> ledger_check_ids();
bool filter_matches(const std::string& filter, const std::string& id);

// Results ordered by id. Throws PreconditionError if the filter selects
// nothing.
std::vector<CheckResult> run_ledger(const LedgerOptions& options = {});

// Deterministic JSON report; timings are included only on request.
std::string ledger_json(const std::vector<CheckResult>& results, std::uint64_t seed,
                        bool with_timing = false);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace braidlab
