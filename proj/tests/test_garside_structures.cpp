#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <set>

#include "braidlab/error.hpp"
#include "braidlab/garside_structure.hpp"
#include "braidlab/named_elements.hpp"
#include "braidlab/normal_form.hpp"
#include "support.hpp"

using namespace braidlab;

namespace {

long long binomial(int n, int k) {
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

long long catalan(int n) { return binomial(2 * n, n) / (n + 1); }

// Set partitions of {1..n} whose blocks do not cross, by direct enumeration.
std::set<std::vector<int>> noncrossing_partitions(int n) {
  std::set<std::vector<int>> out;
  std::vector<int> label(n, 0);
  std::function<void(int, int)> rec = [&](int i, int used) {
    if (i == n) {
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
          for (int c = b + 1; c < n; ++c)
            for (int d = c + 1; d < n; ++d)
              if (label[a] == label[c] && label[b] == label[d] && label[a] != label[b]) return;
      out.insert(label);
      return;
    }
    for (int l = 0; l <= used; ++l) {
      label[i] = l;
      rec(i + 1, std::max(used, l + 1));
    }
  };
  rec(0, 0);
  return out;
}

std::vector<int> labels_of(const std::vector<std::vector<int>>& blocks, int n) {
  std::vector<int> label(n, -1);
  auto sorted = blocks;
  for (auto& b : sorted) std::sort(b.begin(), b.end());
  std::sort(sorted.begin(), sorted.end());
  int next = 0;
  std::vector<int> first(n + 1, -1);
  for (const auto& b : sorted) {
    for (int s : b) label[s - 1] = next;
    ++next;
  }
  for (int i = 1; i <= n; ++i) {
    if (label[i - 1] == -1) label[i - 1] = next++;
  }
  // Relabel by first occurrence.
  std::vector<int> remap(next, -1);
  int k = 0;
  for (int& l : label) {
    if (remap[l] == -1) remap[l] = k++;
    l = remap[l];
  }
  return label;
}

}  // namespace

TEST_CASE("classical simples are the permutations") {
  for (int n = 1; n <= 6; ++n) {
    const ClassicalStructure g(n);
    const auto simples = g.enumerate_simples();
    long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    CHECK(static_cast<long long>(simples.size()) == f);
    CHECK(g.atoms().size() == static_cast<std::size_t>(n - 1));
    CHECK(g.length(g.garside_element()) == n * (n - 1) / 2);
  }
}

TEST_CASE("band simples are the non-crossing partitions") {
  for (int n = 2; n <= 7; ++n) {
    const BandStructure g(n);
    const auto simples = g.enumerate_simples();
    CHECK(static_cast<long long>(simples.size()) == catalan(n));
    CHECK(g.atoms().size() == static_cast<std::size_t>(n * (n - 1) / 2));
    CHECK(g.length(g.garside_element()) == n - 1);
    std::set<std::vector<int>> seen;
    for (const auto& s : simples) seen.insert(labels_of(s.blocks(), n));
    CHECK(seen == noncrossing_partitions(n));
  }
}

TEST_CASE("simple words realise their permutation and length") {
  for (int n = 2; n <= 5; ++n) {
    for (StructureKind kind : {StructureKind::Classical, StructureKind::Band}) {
      const auto g = make_structure(kind, n);
      for (const auto& s : g->enumerate_simples()) {
        const BraidWord w = g->word_of(s);
        const Permutation p = permutation_of(w);
        // A simple stores where each position goes; permutation_of records where each strand started.
        for (int i = 0; i < n; ++i) CHECK(p.inverse().image0(i) == s.at(i));
        if (kind == StructureKind::Classical) {
          CHECK(static_cast<int>(w.length()) == g->length(s));
        } else {
          // Band generators have word length 2|j-i|-1; exponent sum is the band length.
          CHECK(exponent_sum(w) == g->length(s));
        }
      }
    }
  }
}

TEST_CASE("garside element matches the named words") {
  const ClassicalStructure c(5);
  const BandStructure b(5);
  CHECK(words_equal(c, c.word_of(c.garside_element()), half_twist(5)));
  CHECK(words_equal(c, b.word_of(b.garside_element()), band_delta(5)));
}

TEST_CASE("divisibility lattice on simples") {
  for (StructureKind kind : {StructureKind::Classical, StructureKind::Band}) {
    const auto g = make_structure(kind, 4);
    const auto simples = g->enumerate_simples();
    for (const auto& a : simples) {
      CHECK(g->left_divides(g->identity(), a));
      CHECK(g->left_divides(a, g->garside_element()));
      CHECK(g->product(a, g->complement(a)) == g->garside_element());
      CHECK(g->untwist(g->twist(a)) == a);
      CHECK(g->twist_power(a, g->twist_order()) == a);
      for (const auto& b : simples) {
        const Simple m = g->meet(a, b);
        CHECK(g->left_divides(m, a));
        CHECK(g->left_divides(m, b));
        // Every common prefix divides the meet.
        for (const auto& c : simples) {
          if (g->left_divides(c, a) && g->left_divides(c, b)) CHECK(g->left_divides(c, m));
        }
        const Simple rm = g->right_meet(a, b);
        CHECK(g->right_divides(rm, a));
        CHECK(g->right_divides(rm, b));
        if (g->left_divides(a, b)) {
          const Simple q = g->left_quotient(a, b);
          CHECK(g->product(a, q) == b);
          CHECK(g->length(a) + g->length(q) == g->length(b));
        }
      }
    }
  }
}

TEST_CASE("twist is conjugation by the garside element") {
  for (StructureKind kind : {StructureKind::Classical, StructureKind::Band}) {
    const auto g = make_structure(kind, 5);
    const BraidWord delta = g->word_of(g->garside_element());
    for (const auto& s : g->enumerate_simples()) {
      const BraidWord lhs = g->word_of(g->twist(s));
      const BraidWord rhs = compose(compose(inverse(delta), g->word_of(s)), delta);
      CHECK(words_equal(*g, lhs, rhs));
    }
  }
}

TEST_CASE("twist orders") {
  CHECK(ClassicalStructure(5).twist_order() == 2);
  CHECK(BandStructure(5).twist_order() == 5);
}

TEST_CASE("enumeration caps and bad input") {
  CHECK_THROWS_AS(ClassicalStructure(9).enumerate_simples(), CapExceeded);
  CHECK_THROWS_AS(make_structure(StructureKind::Band, kMaxGarsideStrands + 1), PreconditionError);
  CHECK(parse_structure_kind("band") == StructureKind::Band);
  CHECK_THROWS(parse_structure_kind("dual-ish"));
}
