#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "braidlab/automorphism.hpp"
#include "braidlab/error.hpp"
#include "braidlab/four_strand.hpp"
#include "braidlab/free_group.hpp"
#include "braidlab/garside_structure.hpp"
#include "braidlab/integer_matrix.hpp"
#include "braidlab/kernel_abelianization.hpp"
#include "braidlab/matrix_groups.hpp"
#include "braidlab/named_elements.hpp"
#include "braidlab/normal_form.hpp"
#include "braidlab/presentation.hpp"
#include "support.hpp"

using namespace braidlab;
using testing_support::random_word;

namespace {

IntegerMatrix random_matrix(std::mt19937_64& rng, int r, int c, int bound) {
  IntegerMatrix m(r, c);
  std::uniform_int_distribution<int> d(-bound, bound);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.at(i, j) = d(rng);
  return m;
}

long long leibniz_determinant(const IntegerMatrix& m) {
  const int n = m.rows();
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  long long det = 0;
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) inversions += p[i] > p[j];
    long long term = inversions % 2 ? -1 : 1;
    for (int i = 0; i < n; ++i) term *= m.at(i, p[i]);
    det += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return det;
}

// Gcd of all k x k minors, by enumeration.
long long minor_gcd(const IntegerMatrix& m, int k) {
  std::vector<int> rows(m.rows()), cols(m.cols());
  long long g = 0;
  std::vector<bool> rsel(m.rows(), false), csel(m.cols(), false);
  std::fill(rsel.begin(), rsel.begin() + k, true);
  do {
    std::fill(csel.begin(), csel.end(), false);
    std::fill(csel.begin(), csel.begin() + k, true);
    do {
      IntegerMatrix sub(k, k);
      int a = 0;
      for (int i = 0; i < m.rows(); ++i) {
        if (!rsel[i]) continue;
        int b = 0;
        for (int j = 0; j < m.cols(); ++j) {
          if (!csel[j]) continue;
          sub.at(a, b++) = m.at(i, j);
        }
        ++a;
      }
      g = std::gcd(g, std::llabs(leibniz_determinant(sub)));
    } while (std::prev_permutation(csel.begin(), csel.end()));
  } while (std::prev_permutation(rsel.begin(), rsel.end()));
  return g;
}

FinitePresentation free_presentation(std::vector<std::string> names) {
  FinitePresentation p;
  p.generators = std::move(names);
  return p;
}

}  // namespace

TEST_CASE("determinant against the Leibniz formula") {
  std::mt19937_64 rng(40);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 5);
    const IntegerMatrix m = random_matrix(rng, n, n, 6);
    CHECK(m.determinant() == leibniz_determinant(m));
  }
}

TEST_CASE("Smith normal form") {
  const SmithForm s = smith_normal_form(IntegerMatrix({{2, 3}, {4, 5}}));
  CHECK(s.diagonal == std::vector<long long>{1, 2});
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 150; ++trial) {
    const int r = 1 + static_cast<int>(rng() % 4), c = 1 + static_cast<int>(rng() % 4);
    const IntegerMatrix m = random_matrix(rng, r, c, 5);
    const SmithForm f = smith_normal_form(m);
    CHECK(f.u * m * f.v == f.d);
    CHECK(std::llabs(f.u.determinant()) == 1);
    CHECK(std::llabs(f.v.determinant()) == 1);
    CHECK(f.u * f.u.unimodular_inverse() == IntegerMatrix::identity(r));
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j)
        if (i != j) CHECK(f.d.at(i, j) == 0);
    long long prefix = 1;
    for (std::size_t k = 0; k < f.diagonal.size(); ++k) {
      const long long dk = f.diagonal[k];
      CHECK(dk >= 0);
      if (k + 1 < f.diagonal.size() && dk != 0) CHECK(f.diagonal[k + 1] % dk == 0);
      if (k + 1 < f.diagonal.size() && dk == 0) CHECK(f.diagonal[k + 1] == 0);
      // Determinantal divisors: d_1 ... d_k is the gcd of k x k minors.
      prefix *= dk;
      CHECK(prefix == minor_gcd(m, static_cast<int>(k) + 1));
    }
    CHECK(f.rank() == matrix_rank(m));
  }
}

TEST_CASE("checked arithmetic reports overflow") {
  CHECK_THROWS(checked_mul(std::numeric_limits<long long>::max(), 2));
  CHECK_THROWS(checked_add(std::numeric_limits<long long>::max(), 1));
  CHECK(checked_add(2, 3) == 5);
}

TEST_CASE("free words") {
  const FreeWord a = FreeWord::generator(2, 1), b = FreeWord::generator(2, 2);
  CHECK((a * inverse(a)).is_identity());
  CHECK((a * b * inverse(b) * a).length() == 2);
  CHECK(power(a * b, -2).length() == 4);
  CHECK(free_conjugate(a, b) == b * a * inverse(b));
  CHECK(abelianize(a * a * inverse(b)) == std::vector<long long>{2, -1});
  CHECK((a * a * inverse(b) * a).to_string({"w", "c"}) == "w^2*c^-1*w");
  CHECK(FreeWord(2, {}).to_string({"w", "c"}) == "1");
}

TEST_CASE("presentation text format") {
  const FinitePresentation p = FinitePresentation::parse("generators: a b\n# comment\na^2*b/a\n(a*b)^3\n");
  CHECK(p.rank() == 2);
  REQUIRE(p.relators.size() == 2);
  CHECK(p.relators[0] == p.parse_word("a*a*b*a^-1"));
  CHECK(p.relators[1].length() == 6);
  const FinitePresentation q = FinitePresentation::parse(p.to_text());
  CHECK(q.relators == p.relators);
  CHECK_THROWS_AS(p.parse_word("a*z"), ParseError);
  CHECK_THROWS_AS(p.parse_word("(a*b"), ParseError);
  CHECK(p.parse_word("1").is_identity());
}

TEST_CASE("Nielsen-Schreier rank for kernels of free groups") {
  // A subgroup of index k in a free group of rank r is free of rank k(r-1)+1.
  const FinitePresentation f2 = free_presentation({"a", "b"});
  const FiniteImageMap s3{{Permutation::from_cycles(3, "(1,2)"), Permutation::from_cycles(3, "(1,2,3)")}};
  const auto k = KernelAbelianization::compute(f2, s3, 6);
  CHECK(k.index() == 6);
  CHECK(k.free_rank() == 7);
  CHECK(k.invariant_factors() == std::vector<long long>(static_cast<std::size_t>(k.free_rank()), 0));
  CHECK(k.schreier_generator_count() == 7);

  const FinitePresentation f3 = free_presentation({"a", "b", "c"});
  const FiniteImageMap z2{{Permutation::from_cycles(2, "(1,2)"), Permutation(2), Permutation(2)}};
  CHECK(KernelAbelianization::compute(f3, z2).free_rank() == 5);
}

TEST_CASE("kernel abelianization of a cyclic group") {
  // <a | a^6> onto Z/3: the kernel is generated by a^3, of order 2.
  FinitePresentation p = free_presentation({"a"});
  p.relators.push_back(p.parse_word("a^6"));
  const FiniteImageMap z3{{Permutation::from_cycles(3, "(1,2,3)")}};
  const auto k = KernelAbelianization::compute(p, z3);
  CHECK(k.invariant_factors() == std::vector<long long>{2});
  CHECK(k.free_rank() == 0);
  CHECK(k.in_kernel(p.parse_word("a^3")));
  CHECK_FALSE(k.in_kernel(p.parse_word("a")));
  CHECK_THROWS_AS(KernelAbelianization::compute(p, z3, 4), PreconditionError);
}

TEST_CASE("kernel coordinates are additive") {
  // Z^2 = <a,b | [a,b]> onto Z/2 x Z/2; the kernel is generated by a^2, b^2.
  FinitePresentation p = free_presentation({"a", "b"});
  p.relators.push_back(p.parse_word("a*b/a/b"));
  const FiniteImageMap v4{{Permutation::from_cycles(4, "(1,2)"), Permutation::from_cycles(4, "(3,4)")}};
  const auto k = KernelAbelianization::compute(p, v4);
  CHECK(k.free_rank() == 2);
  CHECK(k.invariant_factors() == std::vector<long long>(static_cast<std::size_t>(k.free_rank()), 0));
  const FreeWord x = p.parse_word("a^2"), y = p.parse_word("b*a^4/b");
  auto cx = k.coordinates(x), cy = k.coordinates(y), cxy = k.coordinates(x * y);
  for (std::size_t i = 0; i < cxy.size(); ++i) CHECK(cxy[i] == cx[i] + cy[i]);
  CHECK(basis_check(k, {p.parse_word("a^2"), p.parse_word("b^2")}));
  CHECK_FALSE(basis_check(k, {p.parse_word("a^4"), p.parse_word("b^2")}));
  CHECK_THROWS_AS(k.coordinates(p.parse_word("a")), PreconditionError);
}

TEST_CASE("four-strand presentation and rewriting") {
  const FinitePresentation p = b4prime_presentation();
  const auto gens = b4prime_generator_braids();
  const ClassicalStructure g(4);
  for (const auto& r : p.relators) CHECK(words_equal(g, substitute_braids(r, gens), BraidWord(4)));
  b4prime_image_map().check_relators(p);
  const auto k = KernelAbelianization::compute(p, b4prime_image_map());
  CHECK(k.invariant_factors() == std::vector<long long>(static_cast<std::size_t>(k.free_rank()), 0));
  CHECK(k.free_rank() == 7);
  CHECK(basis_check(k, basis_e4()));

  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 100; ++trial) {
    // Random element of K4 = <c, w>: conjugate random words in c, w.
    BraidWord x(4);
    for (int i = 0; i < 1 + static_cast<int>(rng() % 5); ++i) {
      const BraidWord gen = rng() % 2 ? elem_c() : elem_w();
      x.append(rng() % 2 ? gen : inverse(gen));
    }
    const BraidWord h = random_word(rng, 4, 6);
    const BraidWord y = conjugate(x, h);
    // k4_rewrite is only defined on K4; y lies in K4 since K4 is normal in B4.
    CHECK(words_equal(g, k4_substitute(k4_rewrite(y)), y));
  }
  CHECK(k4_rewrite(compose(compose(elem_u(4), elem_w()), inverse(elem_u(4)))).to_string(k4_names()) ==
        "w^2*c^-1*w");
}

TEST_CASE("three-strand commutator subgroup rewriting") {
  const ClassicalStructure g(3);
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    BraidWord x = random_word(rng, 3, 10);
    const int e = exponent_sum(x);
    x.append(power(BraidWord(3, {1}), -e));
    const FreeWord f = b3prime_rewrite(x);
    CHECK(words_equal(g, b3prime_substitute(f), x));
  }
  const auto k = KernelAbelianization::compute(b3prime_presentation(), b3prime_image_map());
  CHECK(k.free_rank() == 4);
  CHECK(basis_check(k, basis_e3()));
}

TEST_CASE("free group automorphisms") {
  const auto& s = b3prime_sigma1_tilde();
  const FreeGroupAutomorphism inv = s.inverse();
  const FreeWord u = FreeWord::generator(2, 1), t = FreeWord::generator(2, 2);
  for (const FreeWord& x : {u, t, u * t * inverse(u), power(t, 3)}) {
    CHECK(inv.apply(s.apply(x)) == x);
    CHECK(s.apply(inv.apply(x)) == x);
  }
  CHECK(s.after(inv) == FreeGroupAutomorphism::identity(2));
  const auto& a = k4_actions();
  CHECK(a.by_sigma2 == a.by_u.after(a.by_sigma1));
}

TEST_CASE("action matrices") {
  CHECK(b3prime_action_matrix(AutomorphismSpec::sigma_tilde(1)) == IntegerMatrix({{1, 1}, {-1, 0}}));
  CHECK(b3prime_action_matrix(AutomorphismSpec::sigma_tilde(2)) == IntegerMatrix({{1, 1}, {-1, 0}}));
  CHECK(b3prime_action_matrix(AutomorphismSpec::lambda()) == IntegerMatrix({{0, -1}, {-1, 0}}));
  CHECK_THROWS_AS(k4_action_matrix(BraidWord(4, {1})), PreconditionError);
  CHECK(matrix_t() == matrix_s1().unimodular_inverse() * matrix_s2());
  CHECK(matrix_u() == matrix_s2() * matrix_s1().unimodular_inverse());
}

TEST_CASE("matrix group freeness and commutation graphs") {
  CHECK(free_words_check({matrix_t(), matrix_u()}, 10));
  CHECK_FALSE(free_words_check({matrix_s1(), matrix_s2()}, 6));
  CHECK(commutation_graph_connected(5));
  CHECK_FALSE(commutation_graph_connected(4));
  CHECK_THROWS_AS(commutation_graph_connected(1), PreconditionError);
}
