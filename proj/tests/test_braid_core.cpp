#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "braidlab/automorphism.hpp"
#include "braidlab/braid_word.hpp"
#include "braidlab/error.hpp"
#include "braidlab/named_elements.hpp"
#include "braidlab/normal_form.hpp"
#include "braidlab/permutation.hpp"
#include "support.hpp"

using namespace braidlab;
using testing_support::random_word;

TEST_CASE("permutation products compose as functions") {
  const Permutation p = Permutation::from_cycles(4, "(1,2,3)");
  const Permutation q = Permutation::transposition(4, 3, 4);
  const Permutation pq = p * q;
  for (int i = 1; i <= 4; ++i) CHECK(pq(i) == p(q(i)));
  CHECK((p * p.inverse()).is_identity());
  CHECK(p.order() == 3);
  CHECK(p.is_even());
  CHECK_FALSE(q.is_even());
  CHECK(Permutation::from_cycles(6, "(123456)") == Permutation::from_cycles(6, "(1,2,3,4,5,6)"));
  CHECK(Permutation::from_cycles(6, "(1,2)(3,4,5)").cycle_type() == std::vector<int>{3, 2, 1});
  CHECK_THROWS_AS(Permutation::from_images({1, 1, 2}), PreconditionError);
}

TEST_CASE("cycle notation round trip over all of S_4") {
  std::vector<int> images{1, 2, 3, 4};
  do {
    const Permutation p = Permutation::from_images(images);
    CHECK(Permutation::from_cycles(4, p.to_string()) == p);
  } while (std::next_permutation(images.begin(), images.end()));
}

TEST_CASE("braid word text format") {
  const BraidWord w = BraidWord::parse("B4: 1 -2 3");
  CHECK(w.strands() == 4);
  CHECK(w.letters() == std::vector<int>{1, -2, 3});
  CHECK(BraidWord::parse(w.to_string()) == w);
  CHECK(BraidWord::parse("B3:").length() == 0);
  CHECK_THROWS_AS(BraidWord::parse("B3: 3"), ParseError);
  CHECK_THROWS_AS(BraidWord::parse("3: 1"), ParseError);
  CHECK_THROWS_AS(BraidWord::parse("B3: 1 x"), ParseError);
  CHECK_THROWS_AS(BraidWord::parse("B3: 0"), ParseError);
  CHECK_THROWS_AS(compose(BraidWord(3), BraidWord(4)), StrandMismatch);
}

TEST_CASE("permutation map is a homomorphism") {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const BraidWord a = random_word(rng, n, 12), b = random_word(rng, n, 12);
    CHECK(permutation_of(compose(a, b)) == permutation_of(a) * permutation_of(b));
    CHECK(permutation_of(inverse(a)) == permutation_of(a).inverse());
    CHECK(exponent_sum(compose(a, b)) == exponent_sum(a) + exponent_sum(b));
  }
}

TEST_CASE("permutation tracks strand starting positions") {
  // Brute force: follow every strand through the word.
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const BraidWord w = random_word(rng, n, 10);
    const Permutation mu = permutation_of(w);
    for (int start = 1; start <= n; ++start) {
      int pos = start;
      for (int x : w.letters()) {
        const int k = std::abs(x);
        if (pos == k) pos = k + 1;
        else if (pos == k + 1) pos = k;
      }
      CHECK(mu(pos) == start);
    }
  }
}

TEST_CASE("free reduction and powers") {
  CHECK(free_reduce(BraidWord(3, {1, 2, -2, -1, 2})).letters() == std::vector<int>{2});
  CHECK(power(BraidWord(3, {1, 2}), -2).letters() == std::vector<int>{-2, -1, -2, -1});
  CHECK(conjugate(BraidWord(3, {1}), BraidWord(3, {2})).letters() == std::vector<int>{-2, 1, 2});
}

TEST_CASE("strand deletion") {
  // sigma_1 sigma_2 sigma_1 on B3, keeping strands 1 and 3 (which cross once).
  const int keep13[] = {1, 3};
  const BraidWord d = delete_strands_by_start(BraidWord(3, {1, 2, 1}), keep13);
  CHECK(d.strands() == 2);
  CHECK(d.letters() == std::vector<int>{1});
  const int keep1[] = {1};
  CHECK_THROWS_AS(delete_strands(BraidWord(3, {1}), keep1), PreconditionError);
  // Deleting a strand of a pure braid that links nothing else leaves the rest.
  const int keep12[] = {1, 2};
  CHECK(delete_strands(BraidWord(3, {1, 1, 2, -2}), keep12).letters() == std::vector<int>{1, 1});
}

TEST_CASE("projection to B_3") {
  CHECK(project_to_b3(BraidWord(4, {3, -1, 2})).letters() == std::vector<int>{1, -1, 2});
  CHECK_THROWS_AS(project_to_b3(BraidWord(3, {1})), StrandMismatch);
}

TEST_CASE("named elements") {
  const ClassicalStructure g4(4);
  CHECK(half_twist(4).length() == 6);
  CHECK(words_equal(g4, band_delta(4), BraidWord(4, {3, 2, 1})));
  CHECK(band_generator(4, 1, 3).letters() == std::vector<int>{2, 1, -2});
  CHECK(elem_u().letters() == std::vector<int>{2, -1});
  CHECK(elem_t().letters() == std::vector<int>{-1, 2});
  CHECK(elem_c().letters() == std::vector<int>{3, -1});
  CHECK(words_equal(ClassicalStructure(3), elem_v(), compose(inverse(elem_t()), elem_u())));
  CHECK(named_element(NamedTag::D, 4) == elem_d());
  CHECK(exponent_sum(elem_tau(5)) == 0);
}

TEST_CASE("automorphisms of B_n act as homomorphisms") {
  std::mt19937_64 rng(3);
  const ClassicalStructure g(4);
  const std::vector<AutomorphismSpec> specs{
      AutomorphismSpec::lambda(), AutomorphismSpec::sigma_tilde(2), AutomorphismSpec::delta_tilde(),
      AutomorphismSpec::inner(BraidWord(4, {1, -3, 2})), AutomorphismSpec::phi()};
  for (const auto& phi : specs) {
    for (int trial = 0; trial < 20; ++trial) {
      const BraidWord a = random_word(rng, 4, 8), b = random_word(rng, 4, 8);
      CHECK(words_equal(g, apply_automorphism(phi, compose(a, b)),
                        compose(apply_automorphism(phi, a), apply_automorphism(phi, b))));
    }
  }
  // Inner convention: g~(x) = g x g^-1.
  const BraidWord x(4, {1}), h(4, {2});
  CHECK(words_equal(g, apply_automorphism(AutomorphismSpec::inner(h), x), compose(compose(h, x), inverse(h))));
  // Delta~ maps sigma_i to sigma_{n-i}; Lambda inverts generators.
  CHECK(words_equal(g, apply_automorphism(AutomorphismSpec::delta_tilde(), x), BraidWord(4, {3})));
  CHECK(words_equal(g, apply_automorphism(AutomorphismSpec::lambda(), x), BraidWord(4, {-1})));
}
