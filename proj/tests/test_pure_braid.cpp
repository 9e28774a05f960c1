#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "braidlab/error.hpp"
#include "braidlab/integer_matrix.hpp"
#include "braidlab/named_elements.hpp"
#include "braidlab/normal_form.hpp"
#include "braidlab/pure_braid.hpp"
#include "support.hpp"

using namespace braidlab;
using testing_support::random_word;

namespace {

// Random pure braid: a random word followed by the sorting word of its permutation.
BraidWord random_pure(std::mt19937_64& rng, int n, int len) {
  BraidWord w = random_word(rng, n, len);
  std::vector<int> at(n);
  Permutation mu = permutation_of(w);
  for (int i = 0; i < n; ++i) at[i] = mu.image0(i);
  // Bubble sort with positive crossings.
  for (int pass = 0; pass < n; ++pass) {
    for (int k = 0; k + 1 < n; ++k) {
      if (at[k] > at[k + 1]) {
        std::swap(at[k], at[k + 1]);
        w.append_letter(k + 1);
      }
    }
  }
  return w;
}

BraidWord sigma_ij_squared(int n, int i, int j) {
  const BraidWord a = band_generator(n, i, j);
  return compose(a, a);
}

}  // namespace

TEST_CASE("random pure words are pure") {
  std::mt19937_64 rng(20);
  for (int trial = 0; trial < 100; ++trial) {
    CHECK(permutation_of(random_pure(rng, 5, 12)).is_identity());
  }
}

TEST_CASE("linking number examples") {
  CHECK(linking_matrix(BraidWord(2, {1, 1})).at(1, 2) == 1);
  const auto u3 = linking_matrix(power(elem_u(), 3));
  for (auto [i, j, v] : u3.triples()) CHECK(v == 0);
  for (auto [i, j, v] : linking_matrix(power(half_twist(4), 2)).triples()) CHECK(v == 1);
  CHECK(abelianize_pure(power(half_twist(3), 2)) == std::vector<long long>{1, 1, 1});
  CHECK_THROWS_AS(linking_matrix(BraidWord(3, {1})), PreconditionError);
}

TEST_CASE("sigma_ij squared gives the unit vector") {
  for (int n = 2; n <= 6; ++n) {
    const auto pairs = strand_pairs(n);
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      const auto v = abelianize_pure(sigma_ij_squared(n, pairs[p].first, pairs[p].second));
      for (std::size_t q = 0; q < v.size(); ++q) CHECK(v[q] == (p == q ? 1 : 0));
    }
  }
}

TEST_CASE("tau in B5") {
  const LinkingMatrix lk = linking_matrix(elem_tau(5));
  CHECK(lk.at(1, 2) == 3);
  CHECK(lk.at(3, 4) == -1);
  CHECK(lk.at(3, 5) == -1);
  CHECK(lk.at(4, 5) == -1);
  long long sum = 0;
  for (auto [i, j, v] : lk.triples()) {
    sum += v;
    if (i <= 2 && j >= 3) CHECK(v == 0);
  }
  CHECK(sum == 0);
}

TEST_CASE("linking numbers are additive on pure braids") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const BraidWord a = random_pure(rng, 5, 10), b = random_pure(rng, 5, 10);
    const auto la = linking_matrix(a), lb = linking_matrix(b), lab = linking_matrix(compose(a, b));
    for (int i = 1; i <= 5; ++i)
      for (int j = 1; j <= 5; ++j) CHECK(lab.at(i, j) == la.at(i, j) + lb.at(i, j));
    long long upper = 0;
    for (auto [i, j, v] : la.triples()) upper += v;
    CHECK(2 * upper == exponent_sum(a));
  }
}

TEST_CASE("conjugation permutes linking numbers") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 200; ++trial) {
    const BraidWord x = random_pure(rng, 5, 10), g = random_word(rng, 5, 8);
    const Permutation mu = permutation_of(g);
    const auto lx = linking_matrix(x), lc = linking_matrix(conjugate(x, g));
    for (int i = 1; i <= 5; ++i)
      for (int j = 1; j <= 5; ++j)
        if (i != j) CHECK(lx.at(mu(i), mu(j)) == lc.at(i, j));
  }
}

TEST_CASE("rank of the sum-zero sublattice") {
  for (int n = 5; n <= 6; ++n) {
    const auto pairs = strand_pairs(n);
    std::vector<std::vector<long long>> rows;
    for (const auto& [i, j] : pairs)
      for (const auto& [k, l] : pairs)
        if (std::make_pair(i, j) != std::make_pair(k, l)) {
          const BraidWord w = compose(sigma_ij_squared(n, i, j), inverse(sigma_ij_squared(n, k, l)));
          CHECK(membership(w, Subgroup::J));
          rows.push_back(abelianize_pure(w, Subgroup::J));
        }
    const int rank = matrix_rank(IntegerMatrix(rows));
    CHECK(rank == static_cast<int>(pairs.size()) - 1);
  }
}

TEST_CASE("membership") {
  CHECK(membership(elem_u(), Subgroup::Commutator));
  CHECK_FALSE(membership(elem_u(), Subgroup::Pure));
  CHECK(membership(power(elem_u(), 3), Subgroup::J));
  CHECK(membership(BraidWord(5, {1, 1, -3, -3}), Subgroup::J));
  CHECK_FALSE(membership(BraidWord(5, {1, 1}), Subgroup::J));
  CHECK_THROWS_AS(abelianize_pure(power(elem_u(), 3), Subgroup::J), PreconditionError);
  CHECK_THROWS_AS(abelianize_pure(BraidWord(5, {1, 1}), Subgroup::J), PreconditionError);
}

TEST_CASE("periodic degree") {
  CHECK(periodic_degree(power(half_twist(4), 2)) == 1);
  CHECK(periodic_degree(power(half_twist(5), -6)) == -3);
  CHECK(periodic_degree(BraidWord(4)) == 0);
  CHECK_FALSE(periodic_degree(BraidWord(3, {1, 1})).has_value());
  // Degree agrees with the common linking number.
  const BraidWord x = power(band_delta(5), 10);
  CHECK(periodic_degree(x) == 2);
  for (auto [i, j, v] : linking_matrix(x).triples()) CHECK(v == 2);
}

TEST_CASE("the full twist is central") {
  for (int n = 3; n <= 7; ++n) {
    const ClassicalStructure g(n);
    const BraidWord d2 = power(half_twist(n), 2);
    for (int i = 1; i < n; ++i) {
      CHECK(words_equal(g, compose(BraidWord(n, {i}), d2), compose(d2, BraidWord(n, {i}))));
    }
  }
}
