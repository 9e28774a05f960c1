#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "braidlab/error.hpp"
#include "braidlab/four_strand.hpp"
#include "braidlab/ledger.hpp"
#include "json.hpp"

using namespace braidlab;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string("\"") + BRAIDLAB_CLI_PATH + "\" " + args + " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string mutated_b4prime_text() {
  FinitePresentation p = b4prime_presentation();
  // Drop one letter from the last relator.
  auto letters = p.relators.back().letters();
  letters.pop_back();
  p.relators.back() = FreeWord(p.rank(), letters);
  return p.to_text();
}

}  // namespace

TEST_CASE("check ids are unique and sorted") {
  const auto ids = ledger_check_ids();
  CHECK(std::is_sorted(ids.begin(), ids.end()));
  CHECK(std::adjacent_find(ids.begin(), ids.end()) == ids.end());
  CHECK(std::count_if(ids.begin(), ids.end(), [](const std::string& s) { return s.rfind("criterion.", 0) == 0; }) == 16);
}

TEST_CASE("filters") {
  CHECK(filter_matches("k4-action", "k4-action.ucu"));
  CHECK(filter_matches("k4-action.*", "k4-action.twt"));
  CHECK(filter_matches("criterion.07.kernel-abelianization", "criterion.07.kernel-abelianization"));
  CHECK_FALSE(filter_matches("k4", "k4-action.ucu"));
  CHECK_FALSE(filter_matches("criterion.0", "criterion.07.kernel-abelianization"));
  LedgerOptions o;
  o.filter = "k4-action";
  const auto results = run_ledger(o);
  CHECK(results.size() == 4);
  CHECK(all_passed(results));
  o.filter = "no-such-check";
  CHECK_THROWS_AS(run_ledger(o), PreconditionError);
}

TEST_CASE("ledger output is deterministic for a fixed seed") {
  LedgerOptions o;
  o.filter = "criterion.0[1-3]*";
  const std::string a = ledger_json(run_ledger(o), o.seed);
  o.threads = 3;
  const std::string b = ledger_json(run_ledger(o), o.seed);
  CHECK(a == b);
  const auto j = nlohmann::json::parse(a);
  CHECK(j["seed"] == kDefaultLedgerSeed);
  CHECK(j["checks"].size() == 3);
  for (const auto& c : j["checks"]) CHECK_FALSE(c.contains("elapsed_ms"));
}

TEST_CASE("a corrupted relator is reported with a counterexample") {
  LedgerOptions o;
  o.filter = "presentation.b4prime-relators";
  o.b4prime_presentation = mutated_b4prime_text();
  auto results = run_ledger(o);
  REQUIRE(results.size() == 1);
  CHECK(results[0].status == CheckStatus::Fail);
  CHECK_FALSE(results[0].counterexample.empty());
  o.filter = "criterion.07.kernel-abelianization";
  results = run_ledger(o);
  REQUIRE(results.size() == 1);
  CHECK(results[0].status == CheckStatus::Fail);
  CHECK_FALSE(results[0].counterexample.empty());
  // The untouched presentation passes both.
  o.b4prime_presentation.reset();
  CHECK(all_passed(run_ledger(o)));
}

TEST_CASE("command line exit codes") {
  CHECK(run_cli("eq 'B3: 1 2 1' 'B3: 2 1 2'").code == 0);
  CHECK(run_cli("eq 'B3: 1 2' 'B3: 2 1'").code == 1);
  CHECK(run_cli("--structure band eq 'B4: 1 3' 'B4: 3 1'").code == 0);
  CHECK(run_cli("conj 'B3: 1' 'B3: 2'").code == 0);
  CHECK(run_cli("conj 'B3: 1' 'B3: 1 2'").code == 1);
  CHECK(run_cli("nf 'B3: 7'").code == 2);
  CHECK(run_cli("lk 'B3: 1'").code == 2);
  CHECK(run_cli("extract 'B3: 2' -m 2,1").code == 2);
  CHECK(run_cli("no-such-command").code == 2);
  CHECK(run_cli("verify-paper --filter no-such-check").code == 2);
  const RunResult k4 = run_cli("verify-paper --filter k4-action --json");
  CHECK(k4.code == 0);
  const auto j = nlohmann::json::parse(k4.out);
  CHECK(j["checks"].size() == 4);
}

TEST_CASE("command line outputs") {
  CHECK(run_cli("k4-rewrite 'B4: 2 -1 2 3 -1 -2 1 -2'").out.find("w^2*c^-1*w") != std::string::npos);
  const RunResult pi = run_cli("pi --automorphism lambda");
  CHECK(pi.code == 0);
  CHECK(pi.out.find("[[0,-1],[-1,0]]") != std::string::npos);
  const RunResult kab = run_cli("kernel-ab --preset b4prime --json");
  CHECK(kab.code == 0);
  const auto j = nlohmann::json::parse(kab.out);
  CHECK(j["invariant_factors"] == std::vector<long long>(7, 0));
  const std::string path = "mutated_b4prime.txt";
  {
    std::ofstream f(path);
    f << mutated_b4prime_text();
  }
  CHECK(run_cli("verify-paper --filter presentation.b4prime-relators --presentation-override " + path).code == 1);
  std::remove(path.c_str());
}
