#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "braidlab/cabling.hpp"
#include "braidlab/error.hpp"
#include "braidlab/garside_structure.hpp"
#include "braidlab/named_elements.hpp"
#include "braidlab/normal_form.hpp"
#include "braidlab/pure_braid.hpp"
#include "support.hpp"

using namespace braidlab;
using testing_support::random_word;

namespace {

BraidWord random_pure(std::mt19937_64& rng, int n, int len) {
  BraidWord w = random_word(rng, n, len);
  const Permutation mu = permutation_of(w);
  std::vector<int> at(n);
  for (int i = 0; i < n; ++i) at[i] = mu.image0(i);
  for (int pass = 0; pass < n; ++pass)
    for (int k = 0; k + 1 < n; ++k)
      if (at[k] > at[k + 1]) {
        std::swap(at[k], at[k + 1]);
        w.append_letter(k + 1);
      }
  return w;
}

Composition random_composition(std::mt19937_64& rng, int max_blocks, int max_part) {
  const int k = 1 + static_cast<int>(rng() % max_blocks);
  std::vector<int> parts;
  for (int i = 0; i < k; ++i) parts.push_back(1 + static_cast<int>(rng() % max_part));
  return Composition(parts);
}

}  // namespace

TEST_CASE("compositions") {
  const Composition m = Composition::parse("2,1,3");
  CHECK(m.total() == 6);
  CHECK(m.blocks() == 3);
  CHECK(m.block_start(3) == 4);
  CHECK(m.label_vector() == std::vector<int>{1, 1, 2, 3, 3, 3});
  CHECK(Composition::parse(m.to_string()) == m);
  CHECK(compositions_of(4).size() == 8);
  CHECK_THROWS_AS(Composition::parse("2,0"), ParseError);
}

TEST_CASE("cabling examples") {
  const Composition m({2, 2});
  const BraidWord x = cable(BraidWord(2, {-1}), {BraidWord(2, {1, 1}), BraidWord(2, {1, 1})}, m);
  CHECK(x.strands() == 4);
  // The tubular braid swaps the two tubes, so x is not a mixed braid for (2,2).
  CHECK_FALSE(mixed_membership(x, m));
  const ClassicalStructure g(2);
  CHECK(words_equal(g, extract_tubular(x, m), BraidWord(2, {-1})));
  CHECK(words_equal(g, extract_interior(x, m, 1), BraidWord(2, {1, 1})));
  const int keep12[] = {1, 2};
  CHECK(words_equal(g, delete_strands_by_start(x, keep12), BraidWord(2, {1, 1})));
  // Unit tubes reproduce the tubular braid.
  const BraidWord t(3, {1, -2, 1});
  CHECK(cable(t, {BraidWord(1), BraidWord(1), BraidWord(1)}, Composition({1, 1, 1})) == t);
}

TEST_CASE("block crossings") {
  // A positive crossing of blocks of widths a and b has a*b positive letters
  // and moves the block permutation accordingly.
  for (int a = 1; a <= 3; ++a) {
    for (int b = 1; b <= 3; ++b) {
      const Composition m({a, b});
      const BraidWord x = cable(BraidWord(2, {1}), {BraidWord(a), BraidWord(b)}, m);
      CHECK(static_cast<int>(x.length()) == a * b);
      CHECK(exponent_sum(x) == a * b);
      const Permutation mu = permutation_of(x);
      // The strand now at position p started at mu(p).
      for (int p = 1; p <= b; ++p) CHECK(mu(p) == a + p);
      for (int p = 1; p <= a; ++p) CHECK(mu(b + p) == p);
    }
  }
  // The full twist of two tubes is the square of the block crossing.
  const Composition m({2, 3});
  const BraidWord sq = cable(BraidWord(2, {1, 1}), {BraidWord(2), BraidWord(3)}, m);
  const auto lk = linking_matrix(sq);
  for (int i = 1; i <= 2; ++i)
    for (int j = 3; j <= 5; ++j) CHECK(lk.at(i, j) == 1);
  CHECK(lk.at(1, 2) == 0);
  CHECK(lk.at(3, 4) == 0);
}

TEST_CASE("the generator sigma_2 does not preserve tubes of widths (2,1)") {
  const Composition m({2, 1});
  CHECK_FALSE(mixed_membership(BraidWord(3, {2}), m));
  CHECK_THROWS_AS(extract_tubular(BraidWord(3, {2}), m), NotTubePreserving);
  CHECK_THROWS_AS(extract_interior(BraidWord(3, {2}), m, 1), NotTubePreserving);
  CHECK_THROWS_AS(cable(BraidWord(2, {1}), {BraidWord(2)}, m), StrandMismatch);
}

TEST_CASE("extract inverts cable on random instances") {
  std::mt19937_64 rng(30);
  for (int trial = 0; trial < 100; ++trial) {
    const Composition m = random_composition(rng, 3, 3);
    const int k = m.blocks();
    const BraidWord tubular = random_pure(rng, k, 6);
    std::vector<BraidWord> interiors;
    for (int p : m.parts()) interiors.push_back(random_word(rng, p, 6));
    const BraidWord x = cable(tubular, interiors, m);
    CHECK(mixed_membership(x, m));
    CHECK(words_equal(ClassicalStructure(k), extract_tubular(x, m), tubular));
    for (int i = 1; i <= k; ++i) {
      CHECK(words_equal(ClassicalStructure(m.parts()[i - 1]), extract_interior(x, m, i),
                        interiors[i - 1]));
    }
  }
}

TEST_CASE("cabling is a homomorphism on pure tubular braids") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const Composition m = random_composition(rng, 3, 3);
    const int k = m.blocks();
    const BraidWord a = random_pure(rng, k, 5), b = random_pure(rng, k, 5);
    std::vector<BraidWord> ia, ib, iab;
    for (int p : m.parts()) {
      ia.push_back(random_word(rng, p, 4));
      ib.push_back(random_word(rng, p, 4));
      iab.push_back(compose(ia.back(), ib.back()));
    }
    const ClassicalStructure g(m.total());
    CHECK(words_equal(g, compose(cable(a, ia, m), cable(b, ib, m)), cable(compose(a, b), iab, m)));
  }
}

TEST_CASE("tau is a cabling with a trivial tubular braid") {
  const Composition m({2, 3});
  const BraidWord tau = elem_tau(5);
  CHECK(mixed_membership(tau, m));
  CHECK(words_equal(ClassicalStructure(2), extract_tubular(tau, m), BraidWord(2)));
  CHECK(words_equal(ClassicalStructure(2), extract_interior(tau, m, 1), BraidWord(2, {1, 1, 1, 1, 1, 1})));
}
