#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "braidlab/characters.hpp"
#include "braidlab/error.hpp"
#include "braidlab/partition.hpp"
#include "braidlab/permutation.hpp"
#include "braidlab/polynomial.hpp"
#include "braidlab/s6_automorphism.hpp"

using namespace braidlab;

namespace {

// Semistandard tableaux of shape lambda and content mu, counted by brute force.
long long kostka(const Partition& lambda, const Partition& mu) {
  const int n = lambda.size();
  std::vector<std::vector<int>> t(lambda.length());
  for (int r = 0; r < lambda.length(); ++r) t[r].assign(lambda[r], 0);
  std::vector<int> remaining = mu.parts();
  long long count = 0;
  std::function<void(int)> fill = [&](int cell) {
    if (cell == n) {
      ++count;
      return;
    }
    int r = 0, c = cell;
    while (c >= lambda[r]) c -= lambda[r++];
    for (int v = 1; v <= static_cast<int>(remaining.size()); ++v) {
      if (remaining[v - 1] == 0) continue;
      if (c > 0 && t[r][c - 1] > v) continue;
      if (r > 0 && t[r - 1][c] >= v) continue;
      t[r][c] = v;
      --remaining[v - 1];
      fill(cell + 1);
      ++remaining[v - 1];
    }
  };
  fill(0);
  return count;
}

// Fixed tabloids of shape mu under a permutation with the given cycle type:
// ways to distribute the cycles into rows of sizes mu_1, mu_2, ...
long long fixed_tabloids(const Partition& mu, const Partition& cycle_type) {
  std::vector<int> room = mu.parts();
  long long count = 0;
  std::function<void(int)> place = [&](int k) {
    if (k == cycle_type.length()) {
      ++count;
      return;
    }
    for (auto& r : room) {
      if (r >= cycle_type[k]) {
        r -= cycle_type[k];
        place(k + 1);
        r += cycle_type[k];
      }
    }
  };
  place(0);
  return count;
}

Partition cycle_type_of(const Permutation& p) { return Partition(p.cycle_type()); }

}  // namespace

TEST_CASE("named character values") {
  const Partition p51({5, 1}), p42({4, 2});
  CHECK(character_value(p51, Partition({3, 1, 1, 1})) == 2);
  CHECK(character_value(p51, Partition({3, 3})) == -1);
  CHECK(character_value(p42, Partition({1, 1, 1, 1, 1, 1})) == 9);
  CHECK(character_value(p51, Partition({1, 1, 1, 1, 1, 1})) == 5);
  for (const auto& mu : partitions_of(6)) CHECK(character_value(Partition({6}), mu) == 1);
  CHECK_THROWS_AS(character_value(p51, Partition({3, 2})), PreconditionError);
}

TEST_CASE("partitions and class sizes") {
  const std::vector<std::size_t> counts{1, 1, 2, 3, 5, 7, 11, 15, 22};
  for (int n = 0; n <= 8; ++n) CHECK(partitions_of(n).size() == counts[n]);
  // Class sizes against enumeration of S_n.
  for (int n = 1; n <= 6; ++n) {
    std::map<Partition, long long> seen;
    std::vector<int> images(n);
    std::iota(images.begin(), images.end(), 1);
    do {
      ++seen[cycle_type_of(Permutation::from_images(images))];
    } while (std::next_permutation(images.begin(), images.end()));
    for (const auto& mu : partitions_of(n)) CHECK(class_size(mu) == seen[mu]);
  }
  CHECK(Partition::parse(Partition({4, 2}).to_string()) == Partition({4, 2}));
}

TEST_CASE("Young's rule: permutation characters on tabloids") {
  for (int n = 1; n <= 6; ++n) {
    const auto parts = partitions_of(n);
    for (const auto& mu : parts) {
      for (const auto& c : parts) {
        long long rhs = 0;
        for (const auto& lambda : parts) rhs += kostka(lambda, mu) * character_value(lambda, c);
        CHECK(fixed_tabloids(mu, c) == rhs);
      }
    }
  }
}

TEST_CASE("orthogonality and dimensions") {
  for (int n = 1; n <= 7; ++n) {
    const auto parts = partitions_of(n);
    long long sum_sq = 0;
    for (const auto& a : parts) {
      const long long dim = character_value(a, Partition(std::vector<int>(n, 1)));
      CHECK(dim == hook_length_dimension(a));
      sum_sq += dim * dim;
      for (const auto& b : parts) {
        long long s = 0;
        for (const auto& c : parts) s += class_size(c) * character_value(a, c) * character_value(b, c);
        CHECK(s == (a == b ? factorial(n) : 0));
      }
    }
    CHECK(sum_sq == factorial(n));
  }
  for (int n = 2; n <= 8; ++n) {
    std::vector<int> p{n - 1, 1};
    CHECK(hook_length_dimension(Partition(p)) == n - 1);
  }
}

TEST_CASE("sign character") {
  for (int n = 1; n <= 7; ++n) {
    const Partition sign(std::vector<int>(n, 1));
    for (const auto& c : partitions_of(n)) {
      // Sign of a permutation with cycle type c.
      const int parity = (n - c.length()) % 2;
      CHECK(character_value(sign, c) == (parity ? -1 : 1));
    }
  }
}

TEST_CASE("symmetric square of the natural character by counting fixed pairs") {
  for (int n = 2; n <= 7; ++n) {
    const CharacterVector s = symmetric_square(natural_character(n));
    for (const auto& c : partitions_of(n)) {
      const long long f1 = c.multiplicity(1), c2 = c.multiplicity(2);
      CHECK(s.at(c) == f1 + f1 * (f1 - 1) / 2 + c2);
    }
  }
}

TEST_CASE("module decompositions") {
  using Mult = std::vector<std::pair<Partition, long long>>;
  auto as_map = [](const Mult& m) {
    std::map<Partition, long long> out;
    for (const auto& [p, k] : m) out[p] = k;
    return out;
  };
  for (int n = 5; n <= 8; ++n) {
    const auto m = as_map(decompose(ModuleTarget::Sym2Standard, n));
    std::map<Partition, long long> expected{{Partition({n}), 2},
                                            {Partition({n - 1, 1}), 2},
                                            {Partition({n - 2, 2}), 1}};
    CHECK(m == expected);
  }
  CHECK(as_map(decompose(ModuleTarget::Wmodule, 6)) ==
        std::map<Partition, long long>{{Partition({5, 1}), 1}, {Partition({4, 2}), 1}});
  CHECK(as_map(decompose(ModuleTarget::Sym2Vn11, 5)) ==
        std::map<Partition, long long>{{Partition({5}), 1}, {Partition({4, 1}), 1}, {Partition({3, 2}), 1}});
  CHECK(parse_module_target("w") == ModuleTarget::Wmodule);
  // Decomposition reconstructs the character.
  const CharacterVector chi = module_character(ModuleTarget::Sym2Vn11, 6);
  CharacterVector rebuilt{6, std::vector<long long>(chi.values.size(), 0)};
  for (const auto& [lambda, k] : decompose(chi)) {
    for (long long i = 0; i < k; ++i) rebuilt = rebuilt + irreducible_character(lambda);
  }
  CHECK(rebuilt == chi);
}

TEST_CASE("splitting identity as polynomials") {
  for (int n = 5; n <= 7; ++n) {
    const auto [lhs, rhs] = generator_splitting_identity(n);
    CHECK(lhs == rhs);
    CHECK_FALSE(lhs.terms().empty());
  }
  const Polynomial e1 = Polynomial::variable(2, 1), e2 = Polynomial::variable(2, 2);
  CHECK((e1 + e2) * (e1 - e2) == e1 * e1 - e2 * e2);
}

TEST_CASE("the exceptional automorphism of S_6") {
  CHECK(nu_map(Permutation::from_cycles(6, "(1,2)")) == Permutation::from_cycles(6, "(1,2)(3,4)(5,6)"));
  CHECK(nu_map(Permutation::from_cycles(6, "(1,2,3,4,5,6)")) == Permutation::from_cycles(6, "(1,2,3)(4,5)"));
  CHECK(nu_map(Permutation::from_cycles(6, "(1,2,3)")).cycle_type() == std::vector<int>{3, 3});
  const NuReport r = verify_nu();
  CHECK(r.homomorphism);
  CHECK(r.bijective);
  CHECK_FALSE(r.preserves_transpositions);
  CHECK(r.elements == 720);
  // nu swaps the characters of (5,1) and its twist: chi(nu(a)) differs from chi(a).
  const Partition p51({5, 1});
  const Permutation a = Permutation::from_cycles(6, "(1,2,3)");
  CHECK(character_value(p51, cycle_type_of(a)) == 2);
  CHECK(character_value(p51, cycle_type_of(nu_map(a))) == -1);
}
