#include "braidlab/ledger.hpp"

#include <fnmatch.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <future>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <sstream>

#include "braidlab/atom_pairs.hpp"
#include "braidlab/automorphism.hpp"
#include "braidlab/cabling.hpp"
#include "braidlab/characters.hpp"
#include "braidlab/error.hpp"
#include "braidlab/four_strand.hpp"
#include "braidlab/garside_structure.hpp"
#include "braidlab/kernel_abelianization.hpp"
#include "braidlab/matrix_groups.hpp"
#include "braidlab/named_elements.hpp"
#include "braidlab/normal_form.hpp"
#include "braidlab/partition.hpp"
#include "braidlab/polynomial.hpp"
#include "braidlab/pure_braid.hpp"
#include "braidlab/s6_automorphism.hpp"
#include "braidlab/sliding.hpp"
#include "json.hpp"

namespace braidlab {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// Every randomized suite draws from one generator seeded by the run seed and
// the check id, so a filtered run reproduces the full run's instances.
class Rng {
 public:
  Rng(std::uint64_t seed, const std::string& id) {
    std::uint64_t h = 1469598103934665603ULL;
    for (char c : id) h = (h ^ static_cast<unsigned char>(c)) * 1099511628211ULL;
    engine_.seed(seed ^ h);
  }
  // Uniform in [lo, hi].
  int uniform(int lo, int hi) {
    return lo + static_cast<int>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  bool coin() { return (engine_() & 1) != 0; }

  BraidWord word(int n, int min_len, int max_len) {
    BraidWord w(n);
    if (n < 2) return w;
    const int len = uniform(min_len, max_len);
    for (int i = 0; i < len; ++i) {
      const int k = uniform(1, n - 1);
      w.append_letter(coin() ? k : -k);
    }
    return w;
  }

  // A random pure braid: a random word followed by a sorting word.
  BraidWord pure_word(int n, int max_len) {
    BraidWord w = word(n, 0, max_len);
    std::vector<int> at(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) at[static_cast<std::size_t>(i)] = i;
    for (int x : w.letters()) std::swap(at[static_cast<std::size_t>(std::abs(x) - 1)], at[static_cast<std::size_t>(std::abs(x))]);
    for (int pass = 0; pass < n; ++pass) {
      for (int k = 0; k + 1 < n; ++k) {
        if (at[static_cast<std::size_t>(k)] > at[static_cast<std::size_t>(k + 1)]) {
          std::swap(at[static_cast<std::size_t>(k)], at[static_cast<std::size_t>(k + 1)]);
          w.append_letter(coin() ? k + 1 : -(k + 1));
        }
      }
    }
    return w;
  }

 private:
  std::mt19937_64 engine_;
};

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;
  std::string counterexample;

  void note(const std::string& s) { notes.push_back(s); }
  // Records a failure; only the first counterexample is kept.
  void fail(const std::string& what) {
    if (pass) counterexample = what;
    pass = false;
  }
  void expect(bool ok, const std::string& what) {
    if (!ok) fail(what);
  }
};

struct Context {
  const LedgerOptions& options;
  Rng rng;
};

using CheckFn = std::function<void(Context&, Outcome&)>;

struct Check {
  std::string id;
  CheckFn run;
};

std::unique_ptr<GarsideStructure> classical(int n) {
  return make_structure(StructureKind::Classical, n);
}

bool equal_braids(const BraidWord& a, const BraidWord& b) {
  return words_equal(*classical(a.strands()), a, b);
}

BraidWord letters(int n, std::vector<int> l) { return BraidWord(n, std::move(l)); }

BraidWord conj_by(const BraidWord& x, const BraidWord& g) {  // g x g^-1
  return compose(compose(g, x), inverse(g));
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string vec_string(const std::vector<long long>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + "]";
}

void time_limit(Outcome& out, Clock::time_point t0, double limit_ms, const std::string& what) {
  const double ms = ms_since(t0);
  if (ms > limit_ms) {
    out.fail(what + " took " + std::to_string(static_cast<long long>(ms)) + " ms, limit " +
             std::to_string(static_cast<long long>(limit_ms)) + " ms");
  }
}

// Random relation moves that keep the braid unchanged.
BraidWord scramble(const BraidWord& w, Rng& rng, int moves) {
  std::vector<int> l = w.letters();
  const int n = w.strands();
  if (n < 2) return w;
  for (int m = 0; m < moves; ++m) {
    const int kind = rng.uniform(0, 2);
    if (kind == 0 || l.size() < 2) {
      const int k = rng.uniform(1, n - 1) * (rng.coin() ? 1 : -1);
      const auto pos = static_cast<std::ptrdiff_t>(rng.uniform(0, static_cast<int>(l.size())));
      l.insert(l.begin() + pos, {k, -k});
    } else if (kind == 1) {
      const auto i = static_cast<std::size_t>(rng.uniform(0, static_cast<int>(l.size()) - 2));
      if (std::abs(std::abs(l[i]) - std::abs(l[i + 1])) > 1) std::swap(l[i], l[i + 1]);
    } else {
      for (std::size_t i = 0; i + 2 < l.size(); ++i) {
        const int a = l[i], b = l[i + 1];
        if (l[i + 2] == a && (a > 0) == (b > 0) && std::abs(std::abs(a) - std::abs(b)) == 1) {
          l[i] = b;
          l[i + 1] = a;
          l[i + 2] = b;
          break;
        }
      }
    }
  }
  return BraidWord(n, l);
}

// ---------------------------------------------------------------------------
// Acceptance criteria

void word_problem(Context& ctx, Outcome& out) {
  const auto t0 = Clock::now();
  int trivial = 0;
  for (int i = 0; i < 500; ++i) {
    const int n = ctx.rng.uniform(2, 7);
    const BraidWord w = ctx.rng.word(n, 0, 40);
    const auto kind = i % 2 == 0 ? StructureKind::Classical : StructureKind::Band;
    const auto g = make_structure(kind, n);
    if (normal_form(*g, compose(w, inverse(w))).is_identity()) {
      ++trivial;
    } else {
      out.fail("w w^-1 nontrivial for " + w.to_string() + " (" + to_string(kind) + ")");
    }
  }
  out.note("w w^-1 trivial " + std::to_string(trivial) + "/500");
  int relations = 0;
  for (int n = 3; n <= 7; ++n) {
    for (auto kind : {StructureKind::Classical, StructureKind::Band}) {
      const auto g = make_structure(kind, n);
      const BraidWord d2 = power(half_twist(n), 2);
      for (int i = 1; i < n; ++i) {
        if (i + 1 < n) {
          ++relations;
          out.expect(words_equal(*g, letters(n, {i, i + 1, i}), letters(n, {i + 1, i, i + 1})),
                     "braid relation " + std::to_string(i) + " in B" + std::to_string(n));
        }
        for (int j = i + 2; j < n; ++j) {
          ++relations;
          out.expect(words_equal(*g, letters(n, {i, j}), letters(n, {j, i})),
                     "far commutation " + std::to_string(i) + "," + std::to_string(j));
        }
        out.expect(words_equal(*g, compose(d2, letters(n, {i})), compose(letters(n, {i}), d2)),
                   "Delta^2 not central in B" + std::to_string(n));
      }
    }
  }
  out.note("relations " + std::to_string(relations) + " in both structures; Delta^2 central n=3..7");
  time_limit(out, t0, 10000, "word problem suite");
}

void two_structures(Context& ctx, Outcome& out) {
  int equal = 0;
  for (int i = 0; i < 200; ++i) {
    const int n = ctx.rng.uniform(2, 5);
    const BraidWord a = ctx.rng.word(n, 0, 16);
    const bool related = ctx.rng.coin();
    const BraidWord b = related ? scramble(a, ctx.rng, 12) : ctx.rng.word(n, 0, 16);
    const bool c = words_equal(*make_structure(StructureKind::Classical, n), a, b);
    const bool d = words_equal(*make_structure(StructureKind::Band, n), a, b);
    if (c != d) out.fail("verdicts differ on " + a.to_string() + " vs " + b.to_string());
    if (related && !c) out.fail("relation moves not recognised: " + a.to_string() + " vs " + b.to_string());
    if (!(permutation_of(a) == permutation_of(b)) && c) out.fail("different permutations judged equal");
    equal += c ? 1 : 0;
  }
  out.note("200 pairs, " + std::to_string(equal) + " equal, verdicts identical");
}

long long catalan(int n) {
  long long c = 1;
  for (int i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

void garside_combinatorics(Context&, Outcome& out) {
  for (int n = 3; n <= 6; ++n) {
    const auto cs = make_structure(StructureKind::Classical, n)->enumerate_simples().size();
    const auto bs = make_structure(StructureKind::Band, n)->enumerate_simples().size();
    out.expect(static_cast<long long>(cs) == factorial(n), "classical count at n=" + std::to_string(n));
    out.expect(static_cast<long long>(bs) == catalan(n), "band count at n=" + std::to_string(n));
  }
  out.note("simple counts n!, Catalan(n) for n=3..6");
  long long pairs = 0;
  for (int n = 2; n <= 4; ++n) {
    for (auto kind : {StructureKind::Classical, StructureKind::Band}) {
      const auto g = make_structure(kind, n);
      const auto simples = g->enumerate_simples();
      const std::string where = to_string(kind) + " n=" + std::to_string(n);
      // Divisibility oracle from normal forms of products of simples.
      std::map<NormalForm, std::size_t> index;
      for (std::size_t i = 0; i < simples.size(); ++i) {
        index.emplace(normal_form(*g, g->word_of(simples[i])), i);
      }
      const std::size_t s = simples.size();
      std::vector<std::vector<bool>> prefix(s, std::vector<bool>(s, false));
      std::vector<std::vector<bool>> suffix(s, std::vector<bool>(s, false));
      for (std::size_t a = 0; a < s; ++a) {
        for (std::size_t c = 0; c < s; ++c) {
          const auto it = index.find(
              normal_form(*g, compose(g->word_of(simples[a]), g->word_of(simples[c]))));
          if (it == index.end()) continue;
          prefix[a][it->second] = true;
          suffix[c][it->second] = true;
        }
      }
      for (std::size_t a = 0; a < s; ++a) {
        out.expect(prefix[a][a], "reflexivity " + where);
        for (std::size_t b = 0; b < s; ++b) {
          ++pairs;
          out.expect(g->left_divides(simples[a], simples[b]) == prefix[a][b], "left_divides " + where);
          out.expect(g->right_divides(simples[a], simples[b]) == suffix[a][b], "right_divides " + where);
          const Simple m = g->meet(simples[a], simples[b]);
          const Simple r = g->right_meet(simples[a], simples[b]);
          const std::size_t mi = index.at(normal_form(*g, g->word_of(m)));
          const std::size_t ri = index.at(normal_form(*g, g->word_of(r)));
          out.expect(prefix[mi][a] && prefix[mi][b], "meet is not a common prefix " + where);
          out.expect(suffix[ri][a] && suffix[ri][b], "right meet is not a common suffix " + where);
          for (std::size_t d = 0; d < s; ++d) {
            if (prefix[d][a] && prefix[d][b]) out.expect(prefix[d][mi], "meet not greatest " + where);
            if (suffix[d][a] && suffix[d][b]) out.expect(suffix[d][ri], "right meet not greatest " + where);
          }
          out.expect(m == g->meet(simples[b], simples[a]), "meet not commutative " + where);
        }
        const Simple comp = g->complement(simples[a]);
        out.expect(words_equal(*g, compose(g->word_of(simples[a]), g->word_of(comp)),
                               g->word_of(g->garside_element())),
                   "complement " + where);
      }
    }
  }
  out.note("lattice laws exhaustive on " + std::to_string(pairs) + " pairs, n<=4, both structures");
}

void cabling_powers(Context&, Outcome& out) {
  int cases = 0;
  for (int n = 1; n <= 6; ++n) {
    const auto g = classical(n);
    for (const auto& m : compositions_of(n)) {
      for (int p = -2; p <= 2; ++p) {
        std::vector<BraidWord> inner;
        for (int x : m.parts()) inner.push_back(power(half_twist(x), p));
        ++cases;
        out.expect(words_equal(*g, cable(power(half_twist(m.blocks()), p), inner, m),
                               power(half_twist(n), p)),
                   "composition " + m.to_string() + ", p=" + std::to_string(p));
      }
    }
  }
  out.note(std::to_string(cases) + " cabled half-twist powers equal Delta_n^p");
}

struct NamedIdentity {
  std::string name;
  BraidWord lhs;
  BraidWord rhs;
};

// The four conjugation relations of B'_3 on K_4, as (lhs braid, expected word in c, w).
std::vector<std::tuple<std::string, BraidWord, FreeWord>> k4_relations() {
  const BraidWord u = elem_u(4), t = elem_t(4), c = elem_c(), w = elem_w();
  const auto k = [](std::vector<int> l) { return FreeWord(2, std::move(l)); };
  return {{"ucu", conj_by(c, u), k({2})},
          {"uwu", conj_by(w, u), k({2, 2, -1, 2})},
          {"tct", conj_by(c, t), k({1, 2})},
          {"twt", conj_by(w, t), k({1, 2, 2})}};
}

void k4_relation_check(const std::string& which, Outcome& out) {
  for (const auto& [name, lhs, expected] : k4_relations()) {
    if (name != which) continue;
    const BraidWord rhs = k4_substitute(expected);
    out.expect(equal_braids(lhs, rhs), "braid identity fails: " + lhs.to_string());
    const FreeWord rewritten = k4_rewrite(lhs);
    out.expect(rewritten == expected, "k4_rewrite gives " + rewritten.to_string(k4_names()) +
                                          ", expected " + expected.to_string(k4_names()));
    out.note(name + ": " + expected.to_string(k4_names()));
  }
}

void four_strand_identities(Context&, Outcome& out) {
  const BraidWord c = elem_c(), w = elem_w(), d = elem_d(), delta = half_twist(4);
  const BraidWord d_cabled =
      cable(letters(2, {-1}), {letters(2, {1, 1}), letters(2, {1, 1})}, Composition({2, 2}));
  const BraidWord d_formula = compose(letters(4, {1, 1, 1, 3, 3, 3}), inverse(delta));
  std::vector<NamedIdentity> ids{
      {"d cabled = s1^3 s3^3 Delta^-1", d_cabled, d_formula},
      {"named d", d, d_formula},
      {"s1~(w) = c^-1 w", apply_automorphism(AutomorphismSpec::sigma_tilde(1), w),
       compose(inverse(c), w)},
      {"Phi(c) = c", apply_automorphism(AutomorphismSpec::phi(), c), c},
      {"Phi(w) = w^-1", apply_automorphism(AutomorphismSpec::phi(), w), inverse(w)},
      {"c^Delta = c^-1", conjugate(c, delta), inverse(c)},
      {"s1^d = s3", conjugate(letters(4, {1}), d), letters(4, {3})},
      {"s3^d = s1", conjugate(letters(4, {3}), d), letters(4, {1})},
      {"d c d^-1 = c^-1", conj_by(c, d), inverse(c)},
  };
  for (const auto& id : ids) {
    out.expect(equal_braids(id.lhs, id.rhs), id.name + ": " + id.lhs.to_string());
  }
  for (const auto& rel : k4_relations()) k4_relation_check(std::get<0>(rel), out);
  out.note(std::to_string(ids.size()) + " identities and 4 conjugation relations");
}

void linking(Context& ctx, Outcome& out) {
  out.expect(linking_matrix(letters(2, {1, 1})).at(1, 2) == 1, "lk(s1^2)_12 != 1");
  for (int n = 2; n <= 5; ++n) {
    const LinkingMatrix lk = linking_matrix(power(half_twist(n), 2));
    for (auto [i, j, v] : lk.triples()) {
      out.expect(v == 1, "lk(Delta^2) entry (" + std::to_string(i) + "," + std::to_string(j) +
                             ") = " + std::to_string(v) + " at n=" + std::to_string(n));
    }
  }
  for (const auto& x : {power(elem_u(3), 3), power(elem_t(3), 3)}) {
    for (auto [i, j, v] : linking_matrix(x).triples()) out.expect(v == 0, "nonzero lk for " + x.to_string());
  }
  for (int trial = 0; trial < 200; ++trial) {
    const BraidWord x = ctx.rng.pure_word(5, 14);
    const BraidWord gamma = ctx.rng.word(5, 0, 10);
    const Permutation mu = permutation_of(gamma);
    const LinkingMatrix lx = linking_matrix(x);
    const LinkingMatrix lc = linking_matrix(conjugate(x, gamma));
    for (int i = 1; i <= 5; ++i) {
      for (int j = i + 1; j <= 5; ++j) {
        if (lx.at(mu(i), mu(j)) != lc.at(i, j)) {
          out.fail("equivariance fails for X=" + x.to_string() + ", gamma=" + gamma.to_string());
        }
      }
    }
  }
  out.note("lk(s1^2), lk(Delta_n^2) n<=5, lk(u^3)=lk(t^3)=0, equivariance on 200 pairs");
}

FinitePresentation active_b4prime(const Context& ctx) {
  return ctx.options.b4prime_presentation ? FinitePresentation::parse(*ctx.options.b4prime_presentation)
                                          : b4prime_presentation();
}

std::vector<long long> lk_vector(const BraidWord& x) {
  std::vector<long long> v;
  for (auto [i, j, value] : linking_matrix(x).triples()) v.push_back(value);
  return v;
}

void b4prime_relators(const FinitePresentation& p, Outcome& out) {
  const auto gens = b4prime_generator_braids();
  if (p.rank() != static_cast<int>(gens.size())) {
    out.fail("presentation has " + std::to_string(p.rank()) + " generators, expected 4");
    return;
  }
  for (const auto& r : p.relators) {
    const BraidWord b = substitute_braids(r, gens);
    out.expect(normal_form(*classical(4), b).is_identity(),
               "relator " + p.format(r) + " is not a braid identity");
  }
}

void kernel_reproduction(Context& ctx, Outcome& out) {
  const auto t0 = Clock::now();
  const FinitePresentation p4 = active_b4prime(ctx);
  b4prime_relators(p4, out);
  const KernelAbelianization k4 = KernelAbelianization::compute(p4, b4prime_image_map(), 12);
  out.expect(k4.invariant_factors() == std::vector<long long>(7, 0),
             "B'4/A4 invariants " + vec_string(k4.invariant_factors()));
  out.note("B'4/A4: " + vec_string(k4.invariant_factors()) + " from " +
           std::to_string(k4.schreier_generator_count()) + " Schreier generators, " +
           std::to_string(k4.relator_row_count()) + " relator rows");
  time_limit(out, t0, 60000, "B'4 kernel abelianization");

  const KernelAbelianization k3 =
      KernelAbelianization::compute(b3prime_presentation(), b3prime_image_map(), 3);
  out.expect(k3.invariant_factors() == std::vector<long long>(4, 0),
             "B'3/A3 invariants " + vec_string(k3.invariant_factors()));
  out.expect(basis_check(k3, basis_e3()), "E3 is not a basis");
  out.expect(basis_check(k4, basis_e4()), "E4 is not a basis");

  const FinitePresentation std4 = b4prime_presentation();
  const auto gens = b4prime_generator_braids();
  const auto e4 = basis_e4();
  std::vector<std::vector<long long>> rows;
  for (std::size_t i = 0; i < e4.size(); ++i) {
    const BraidWord b = substitute_braids(e4[i], gens);
    const auto v = lk_vector(b);
    if (i == 2 || i == 3) {
      out.expect(std::all_of(v.begin(), v.end(), [](long long x) { return x == 0; }),
                 "lk of " + std4.format(e4[i]) + " = " + vec_string(v));
    } else {
      rows.push_back(v);
    }
  }
  const SmithForm s = smith_normal_form(IntegerMatrix(rows));
  out.expect(s.rank() == 5, "rank of im p4 is " + std::to_string(s.rank()));
  bool saturated = std::all_of(s.diagonal.begin(), s.diagonal.end(), [](long long d) { return d == 1; });
  for (const auto& r : rows) {
    long long sum = 0;
    for (long long x : r) sum += x;
    saturated = saturated && sum == 0;
  }
  out.expect(saturated, "im p4 is not the sum-zero lattice");
  out.note("B'3/A3: " + vec_string(k3.invariant_factors()) +
           "; E3, E4 unimodular; rk im p4 = 5; lk(u^3) = lk(t^3) = 0");
}

void rank_formula(Context&, Outcome& out) {
  for (int n = 5; n <= 6; ++n) {
    // J_n = ker(e|P_n); Schreier generators over the transversal A_12^k.
    const BraidWord a12 = power(band_generator(n, 1, 2), 2);
    std::vector<std::vector<long long>> rows;
    int generators = 0;
    for (auto [i, j] : strand_pairs(n)) {
      const BraidWord aij = power(band_generator(n, i, j), 2);
      for (int k = -1; k <= 1; ++k) {
        const BraidWord x = compose(compose(power(a12, k), aij), power(a12, -k - 1));
        if (!membership(x, Subgroup::J)) {
          out.fail("Schreier generator outside J: " + x.to_string());
          continue;
        }
        const auto lk = lk_vector(x);
        out.expect(lk == abelianize_pure(x, Subgroup::J), "J coordinates differ from lk");
        rows.push_back(lk);
        ++generators;
      }
    }
    const SmithForm s = smith_normal_form(IntegerMatrix(rows));
    const int expected = n * (n - 1) / 2 - 1;
    out.expect(s.rank() == expected, "rank " + std::to_string(s.rank()) + " at n=" + std::to_string(n));
    out.note("n=" + std::to_string(n) + ": rank " + std::to_string(s.rank()) + " from " +
             std::to_string(generators) + " generators");
  }
}

void conjugacy(Context& ctx, Outcome& out) {
  const auto t0 = Clock::now();
  int verified = 0;
  for (int i = 0; i < 100; ++i) {
    const int n = ctx.rng.uniform(2, 5);
    const auto kind = i % 2 == 0 ? StructureKind::Classical : StructureKind::Band;
    const auto g = make_structure(kind, n);
    const BraidWord x = ctx.rng.word(n, 1, 10);
    const BraidWord gamma = ctx.rng.word(n, 0, 6);
    const BraidWord y = conjugate(x, gamma);
    const ConjugacyCertificate cert = conjugacy_solve(*g, x, y);
    if (!cert.conjugate || !cert.witness) {
      out.fail("no witness for " + x.to_string() + " ~ " + y.to_string() + ": " + cert.reason);
    } else if (!equal_braids(conjugate(x, *cert.witness), y)) {
      out.fail("bad witness " + cert.witness->to_string() + " for " + x.to_string());
    } else {
      ++verified;
    }
  }
  int refused = 0;
  for (int i = 0; i < 20; ++i) {
    const int n = ctx.rng.uniform(2, 5);
    const auto g = make_structure(i % 2 == 0 ? StructureKind::Classical : StructureKind::Band, n);
    const BraidWord x = ctx.rng.word(n, 1, 8);
    const BraidWord y = compose(conjugate(x, ctx.rng.word(n, 0, 6)), letters(n, {1}));
    const auto cert = conjugacy_solve(*g, x, y);
    if (cert.conjugate) out.fail("exponent-sum negative accepted: " + y.to_string());
    else ++refused;
  }
  for (int i = 0; i < 20; ++i) {
    const int n = ctx.rng.uniform(3, 5);
    const auto g = make_structure(i % 2 == 0 ? StructureKind::Classical : StructureKind::Band, n);
    BraidWord x(n), y(n);
    do {
      x = ctx.rng.word(n, 2, 8);
      y = compose(x, letters(n, {1, -2}));
    } while (permutation_of(x).cycle_type() == permutation_of(y).cycle_type());
    const auto cert = conjugacy_solve(*g, x, y);
    if (cert.conjugate) out.fail("cycle-type negative accepted: " + y.to_string());
    else ++refused;
  }
  out.note(std::to_string(verified) + "/100 witnesses verified; " + std::to_string(refused) +
           "/40 negatives refused");
  time_limit(out, t0, 60000, "conjugacy suite");
}

void atom_pair_standardization(Context& ctx, Outcome& out) {
  const auto band = [](int n) { return make_structure(StructureKind::Band, n); };
  int braid_ok = 0;
  for (int i = 0; i < 50; ++i) {
    const int n = ctx.rng.uniform(3, 5);
    const BraidWord gamma = ctx.rng.word(n, 0, 8);
    const BraidWord x = conjugate(letters(n, {1}), gamma), y = conjugate(letters(n, {2}), gamma);
    const auto u = braid_pair_to_standard(*band(n), x, y);
    if (u && equal_braids(conjugate(x, *u), letters(n, {1})) &&
        equal_braids(conjugate(y, *u), letters(n, {2}))) {
      ++braid_ok;
    } else {
      out.fail("braid pair not standardized: X=" + x.to_string() + ", Y=" + y.to_string());
    }
  }
  int power_ok = 0, instances = 0;
  for (int k = 1; k <= 2; ++k) {
    for (int l = 1; l <= 2; ++l) {
      for (int i = 0; i < 10; ++i) {
        ++instances;
        const int n = ctx.rng.uniform(3, 5);
        const BraidWord gamma = ctx.rng.word(n, 0, 6);
        const BraidWord a = conjugate(letters(n, {1}), gamma), b = conjugate(letters(n, {2}), gamma);
        const auto u = power_pair_to_standard(*band(n), a, b, k, l);
        if (u && equal_braids(conjugate(a, *u), letters(n, {1})) &&
            equal_braids(conjugate(b, *u), letters(n, {2}))) {
          ++power_ok;
        } else {
          out.fail("power pair k=" + std::to_string(k) + " l=" + std::to_string(l) +
                   " not standardized: " + a.to_string() + ", " + b.to_string());
        }
      }
    }
  }
  out.note("band structure: braid pairs " + std::to_string(braid_ok) + "/50, power pairs " +
           std::to_string(power_ok) + "/" + std::to_string(instances));
}

void atom_conjugate_shapes(Context& ctx, Outcome& out) {
  for (auto kind : {StructureKind::Classical, StructureKind::Band}) {
    int holds = 0;
    std::string first;
    for (int i = 0; i < 50; ++i) {
      const int n = ctx.rng.uniform(3, 5);
      const auto g = make_structure(kind, n);
      const auto& atoms = g->atoms();
      const Simple atom = atoms[static_cast<std::size_t>(ctx.rng.uniform(0, static_cast<int>(atoms.size()) - 1))];
      const BraidWord x = conjugate(g->word_of(atom), ctx.rng.word(n, 0, 8));
      const AtomConjugateShape shape = atom_conjugate_shape(*g, normal_form(*g, x));
      if (shape.holds) {
        ++holds;
      } else if (first.empty()) {
        first = x.to_string() + " (" + shape.detail + ")";
      }
    }
    out.note(to_string(kind) + ": " + std::to_string(holds) + "/50");
    if (holds != 50) out.fail(to_string(kind) + " shape fails for " + first);
  }
}

void product_dichotomy_suite(Context& ctx, Outcome& out) {
  int found = 0, case_i = 0;
  const int ks[4] = {1, -1, 2, -2};
  for (int i = 0; i < 40; ++i) {
    const int n = ctx.rng.uniform(3, 4);
    const auto g = make_structure(StructureKind::Band, n);
    const int k = ks[ctx.rng.uniform(0, 3)], l = ks[ctx.rng.uniform(0, 3)];
    const auto& atoms = g->atoms();
    const auto pick = [&] { return atoms[static_cast<std::size_t>(ctx.rng.uniform(0, static_cast<int>(atoms.size()) - 1))]; };
    const BraidWord xa = g->word_of(pick()), ya = g->word_of(pick());
    const BraidWord x = conjugate(power(xa, k), ctx.rng.word(n, 0, 5));
    const BraidWord y = conjugate(power(ya, l), ctx.rng.word(n, 0, 5));
    const auto witness = product_dichotomy(*g, x, k, y, l);
    const std::string inst = "X=" + x.to_string() + ", Y=" + y.to_string();
    if (!witness) {
      out.fail("no witness for " + inst);
      continue;
    }
    const NormalForm xu = normal_form(*g, conjugate(x, witness->u));
    const NormalForm yu = normal_form(*g, conjugate(y, witness->u));
    bool ok = false;
    if (witness->which == DichotomyWitness::Case::AtomPowers) {
      const auto is_power = [&](const NormalForm& z, int e) {
        for (const auto& a : atoms) {
          if (normal_form(*g, power(g->word_of(a), e)) == z) return true;
        }
        return false;
      };
      ok = is_power(xu, k) && is_power(yu, l);
      case_i += ok ? 1 : 0;
    } else {
      const BraidWord z = compose(x, y);
      const NormalForm zu = normal_form(*g, conjugate(z, witness->u));
      const SlidingCircuits sc = sliding_circuits(*g, z);
      ok = zu.canonical_length() == xu.canonical_length() + yu.canonical_length() &&
           sc.find(zu) != nullptr;
    }
    if (ok) ++found;
    else out.fail("witness does not verify for " + inst);
  }
  out.note("band structure: " + std::to_string(found) + "/40 verified, " + std::to_string(case_i) +
           " atom-power cases");
}

long long count_tableaux(std::vector<int> shape) {
  // Removes the largest entry from each corner in turn.
  static std::map<std::vector<int>, long long> memo;
  static std::mutex mutex;
  while (!shape.empty() && shape.back() == 0) shape.pop_back();
  if (shape.empty()) return 1;
  {
    std::lock_guard lock(mutex);
    const auto it = memo.find(shape);
    if (it != memo.end()) return it->second;
  }
  long long total = 0;
  for (std::size_t i = 0; i < shape.size(); ++i) {
    if (i + 1 == shape.size() || shape[i] > shape[i + 1]) {
      std::vector<int> smaller = shape;
      --smaller[i];
      total += count_tableaux(smaller);
    }
  }
  std::lock_guard lock(mutex);
  memo[shape] = total;
  return total;
}

Permutation representative(const Partition& mu) {
  std::vector<int> images;
  int start = 1;
  for (int part : mu.parts()) {
    for (int i = 0; i < part; ++i) images.push_back(start + (i + 1) % part);
    start += part;
  }
  return Permutation::from_images(images);
}

// Character of Sym^2 of the permutation module, counted on the basis of
// unordered pairs {i, j}, i <= j.
CharacterVector sym2_natural_by_counting(int n) {
  CharacterVector chi{n, {}};
  for (const auto& mu : partitions_of(n)) {
    const Permutation g = representative(mu);
    long long fixed = 0;
    for (int i = 1; i <= n; ++i) {
      for (int j = i; j <= n; ++j) {
        const int a = std::min(g(i), g(j)), b = std::max(g(i), g(j));
        if (a == i && b == j) ++fixed;
      }
    }
    chi.values.push_back(fixed);
  }
  return chi;
}

void characters(Context&, Outcome& out) {
  for (int n = 1; n <= 7; ++n) {
    const auto parts = partitions_of(n);
    for (const auto& a : parts) {
      for (const auto& b : parts) {
        out.expect(inner_product(irreducible_character(a), irreducible_character(b)) == (a == b ? 1 : 0),
                   "row orthogonality " + a.to_string() + " " + b.to_string());
      }
    }
    for (const auto& mu : parts) {
      for (const auto& nu : parts) {
        long long sum = 0;
        for (const auto& lambda : parts) sum += character_value(lambda, mu) * character_value(lambda, nu);
        out.expect(sum == (mu == nu ? centralizer_order(mu) : 0),
                   "column orthogonality " + mu.to_string() + " " + nu.to_string());
      }
    }
  }
  for (int n = 1; n <= 8; ++n) {
    const Partition identity(std::vector<int>(static_cast<std::size_t>(n), 1));
    for (const auto& lambda : partitions_of(n)) {
      const long long dim = character_value(lambda, identity);
      out.expect(dim == hook_length_dimension(lambda) && dim == count_tableaux(lambda.parts()),
                 "dimension of " + lambda.to_string());
    }
  }
  const Partition std6({5, 1});
  out.expect(character_value(std6, Partition({3, 1, 1, 1})) == 2, "chi_(5,1) on 3-cycles");
  out.expect(character_value(std6, Partition({3, 3})) == -1, "chi_(5,1) on 3,3");
  for (const auto& mu : partitions_of(6)) {
    out.expect(character_value(std6, mu) == mu.multiplicity(1) - 1, "chi_(5,1) vs fixed points - 1");
  }
  for (int n = 5; n <= 8; ++n) {
    out.expect(module_character(ModuleTarget::Sym2Standard, n) == sym2_natural_by_counting(n),
               "Sym^2 V character at n=" + std::to_string(n));
    const std::vector<std::pair<Partition, long long>> expected{
        {Partition({n}), 2}, {Partition({n - 1, 1}), 2}, {Partition({n - 2, 2}), 1}};
    out.expect(decompose(ModuleTarget::Sym2Standard, n) == expected,
               "Sym^2 V decomposition at n=" + std::to_string(n));
  }
  const std::vector<std::pair<Partition, long long>> w6{{Partition({5, 1}), 1}, {Partition({4, 2}), 1}};
  out.expect(decompose(ModuleTarget::Wmodule, 6) == w6, "W module at n=6");
  for (int n = 5; n <= 7; ++n) {
    const auto [lhs, rhs] = generator_splitting_identity(n);
    out.expect(lhs == rhs, "polynomial identity at n=" + std::to_string(n));
  }
  out.note("orthogonality n<=7, dimensions n<=8, chi_(5,1), Sym^2 V with multiplicities 2,2,1 for n=5..8, W(6), polynomial identity n=5..7");
}

void nu_check(Context&, Outcome& out) {
  const NuReport r = verify_nu();
  out.expect(r.homomorphism, "nu is not a homomorphism");
  out.expect(r.bijective, "nu is not bijective");
  out.expect(r.elements == 720, "nu table has " + std::to_string(r.elements) + " elements");
  out.expect(!r.preserves_transpositions, "nu preserves transpositions");
  out.expect(nu_map(Permutation::from_cycles(6, "(1,2)")) == Permutation::from_cycles(6, "(1,2)(3,4)(5,6)"),
             "nu((12))");
  out.expect(nu_map(Permutation::from_cycles(6, "(1,2,3,4,5,6)")) == Permutation::from_cycles(6, "(1,2,3)(4,5)"),
             "nu((123456))");
  for (const auto& p : {"(1,2,3)", "(2,4,6)", "(1,5,3)"}) {
    const auto ct = nu_map(Permutation::from_cycles(6, p)).cycle_type();
    out.expect(ct == std::vector<int>{3, 3}, std::string("nu") + p + " is not of type 3.3");
  }
  out.note("nu verified on all 720 elements");
}

void pi_matrices(Context&, Outcome& out) {
  const BraidWord t = elem_t(4), u = elem_u(4);
  const IntegerMatrix id = IntegerMatrix::identity(2);
  const IntegerMatrix literal_t({{2, 1}, {1, 1}}), literal_u({{1, 1}, {1, 2}});
  out.expect(matrix_t() == literal_t && matrix_u() == literal_u, "T, U from S1, S2");
  const IntegerMatrix pt = k4_action_matrix(t);
  const IntegerMatrix ptu = k4_action_matrix(compose(t, inverse(u)));
  out.expect(pt == matrix_u(), "pi(t) = " + pt.to_string());
  out.expect(ptu == matrix_t(), "pi(t u^-1) = " + ptu.to_string());
  out.expect(k4_action_matrix(elem_c()) == id && k4_action_matrix(elem_w()) == id, "pi on K4 not trivial");
  const IntegerMatrix s1_expected({{1, 1}, {-1, 0}}), lambda_expected({{0, -1}, {-1, 0}});
  const IntegerMatrix ps1 = b3prime_action_matrix(AutomorphismSpec::sigma_tilde(1));
  const IntegerMatrix ps2 = b3prime_action_matrix(AutomorphismSpec::sigma_tilde(2));
  const IntegerMatrix plam = b3prime_action_matrix(AutomorphismSpec::lambda());
  out.expect(ps1 == s1_expected, "pi(s1~) = " + ps1.to_string());
  out.expect(ps2 == s1_expected, "pi(s2~) = " + ps2.to_string());
  out.expect(b3prime_action_matrix(b3prime_sigma1_tilde()) == ps1, "s1~ formula disagrees with braid route");
  out.expect(plam == lambda_expected, "pi(Lambda) = " + plam.to_string());
  out.expect(free_words_check({matrix_t(), matrix_u()}, 10), "T, U satisfy a relation of length <= 10");
  out.note("pi(t)=U, pi(tu^-1)=T, pi(s1~)=pi(s2~)=" + ps1.to_string() + ", pi(Lambda)=" + plam.to_string() +
           ", <T,U> free to length 10");
}

BraidWord random_composition_braid(Rng& rng, const Composition& m, int max_len,
                                   std::vector<BraidWord>& inner) {
  inner.clear();
  for (int width : m.parts()) inner.push_back(rng.word(width, 0, max_len));
  return rng.word(m.blocks(), 0, 6);
}

Composition random_composition(Rng& rng) {
  const int k = rng.uniform(1, 4);
  std::vector<int> parts;
  for (int i = 0; i < k; ++i) parts.push_back(rng.uniform(1, 3));
  return Composition(parts);
}

void cabling_round_trips(Context& ctx, Outcome& out) {
  int trips = 0;
  for (int i = 0; i < 100; ++i) {
    const Composition m = random_composition(ctx.rng);
    std::vector<BraidWord> inner;
    const BraidWord tube = random_composition_braid(ctx.rng, m, 5, inner);
    const BraidWord w = cable(tube, inner, m);
    bool ok = equal_braids(extract_tubular(w, m), tube);
    for (int b = 1; b <= m.blocks(); ++b) {
      ok = ok && equal_braids(extract_interior(w, m, b), inner[static_cast<std::size_t>(b - 1)]);
    }
    if (ok) ++trips;
    else out.fail("round trip fails for tube " + tube.to_string() + " over " + m.to_string());
  }
  int homs = 0;
  for (int i = 0; i < 100; ++i) {
    const Composition m = random_composition(ctx.rng);
    std::vector<BraidWord> a, b, ab;
    for (int width : m.parts()) {
      a.push_back(ctx.rng.word(width, 0, 4));
      b.push_back(ctx.rng.word(width, 0, 4));
      ab.push_back(compose(a.back(), b.back()));
    }
    const BraidWord x = ctx.rng.pure_word(m.blocks(), 4), y = ctx.rng.pure_word(m.blocks(), 4);
    if (equal_braids(cable(compose(x, y), ab, m), compose(cable(x, a, m), cable(y, b, m)))) ++homs;
    else out.fail("cabling not multiplicative on " + x.to_string() + ", " + y.to_string() + " over " + m.to_string());
  }
  out.note("round trips " + std::to_string(trips) + "/100, homomorphism " + std::to_string(homs) + "/100");
}

// ---------------------------------------------------------------------------
// Supporting checks

void k4_rewrite_soundness(Context& ctx, Outcome& out) {
  int ok = 0;
  for (int i = 0; i < 100; ++i) {
    BraidWord x(4);
    const int factors = ctx.rng.uniform(1, 4);
    for (int f = 0; f < factors; ++f) {
      const BraidWord c = ctx.rng.coin() ? elem_c() : inverse(elem_c());
      x.append(conjugate(c, ctx.rng.word(4, 0, 6)));
    }
    const FreeWord r = k4_rewrite(x);
    if (equal_braids(k4_substitute(r), x)) ++ok;
    else out.fail("rewrite of " + x.to_string() + " does not substitute back");
  }
  out.note(std::to_string(ok) + "/100 random K4 elements rewritten soundly");
}

void coordinate_additivity(Context& ctx, Outcome& out) {
  const FinitePresentation p = b4prime_presentation();
  const KernelAbelianization k = KernelAbelianization::compute(p, b4prime_image_map(), 12);
  const auto random_kernel_word = [&] {
    std::vector<int> l;
    const int len = ctx.rng.uniform(1, 8);
    for (int j = 0; j < len; ++j) l.push_back(ctx.rng.uniform(1, 4) * (ctx.rng.coin() ? 1 : -1));
    FreeWord w(4, l);
    // Close the word up along the transversal of its coset.
    for (const auto& r : k.transversal()) {
      const FreeWord candidate = w * inverse(r);
      if (k.in_kernel(candidate)) return candidate;
    }
    throw Error("no transversal element closes the word");
  };
  for (int i = 0; i < 50; ++i) {
    const FreeWord g = random_kernel_word(), h = random_kernel_word();
    const auto cg = k.coordinates(g), ch = k.coordinates(h), cgh = k.coordinates(g * h);
    std::vector<long long> sum(cg.size());
    for (std::size_t j = 0; j < cg.size(); ++j) sum[j] = cg[j] + ch[j];
    out.expect(sum == cgh, "coords not additive on " + p.format(g) + ", " + p.format(h));
  }
  const KernelAbelianization trivial =
      KernelAbelianization::compute(b3prime_presentation(),
                                    FiniteImageMap{{Permutation(1), Permutation(1)}}, 1);
  out.expect(trivial.invariant_factors() == std::vector<long long>(2, 0), "free <u,t> at index 1");
  const auto e3 = basis_e3();
  const KernelAbelianization k3 =
      KernelAbelianization::compute(b3prime_presentation(), b3prime_image_map(), 3);
  out.expect(!basis_check(k3, {e3[2], e3[2], e3[0], e3[1]}), "repeated element accepted as a basis");
  out.note("coordinates additive on 50 pairs; free rank 2 at index 1; repeated basis rejected");
}

void j4_to_j3(Context& ctx, Outcome& out) {
  int ok = 0;
  for (int i = 0; i < 50; ++i) {
    BraidWord x = ctx.rng.pure_word(4, 12);
    const int e = exponent_sum(x);
    // Fix the exponent sum with a pure correction sigma_1^(-e).
    if (e % 2 != 0) throw Error("pure braid with odd exponent sum");
    x.append(power(letters(4, {1, 1}), -e / 2));
    if (!membership(x, Subgroup::J)) {
      out.fail("sample not in J4: " + x.to_string());
      continue;
    }
    const BraidWord p = project_to_b3(x);
    if (membership(p, Subgroup::J)) ++ok;
    else out.fail("projection of " + x.to_string() + " leaves J3");
  }
  // phi(u) = u, phi(t) = u t: ut in J3 but phi^-1(ut) = t is not.
  const FreeGroupAutomorphism phi({FreeWord(2, {1}), FreeWord(2, {1, 2})});
  const FreeWord ut(2, {1, 2});
  const FreeWord pre = phi.inverse().apply(ut);
  out.expect(membership(b3prime_substitute(ut), Subgroup::J), "ut not in J3");
  out.expect(pre == FreeWord(2, {2}), "phi^-1(ut) = " + pre.to_string(b3prime_names()));
  out.expect(!membership(b3prime_substitute(pre), Subgroup::J), "t in J3");
  out.note(std::to_string(ok) + "/50 J4 samples project into J3; J3 not characteristic witness");
}

void misc_subgroup(Context&, Outcome& out) {
  out.expect(commutation_graph_connected(5), "graph n=5");
  out.expect(!commutation_graph_connected(4), "graph n=4");
  out.expect(!commutation_graph_connected(3), "graph n=3");
  const auto diag = [](std::vector<std::vector<long long>> m) { return smith_normal_form(IntegerMatrix(m)).diagonal; };
  out.expect(diag({{1, 0}, {0, 1}}) == std::vector<long long>{1, 1}, "SNF identity");
  out.expect(diag({{2, 0}, {0, 4}}) == std::vector<long long>{2, 4}, "SNF diag(2,4)");
  out.expect(diag({{2, 3}, {4, 5}}) == std::vector<long long>{1, 2}, "SNF [[2,3],[4,5]]");
  out.expect(!free_words_check({matrix_s1(), matrix_s2()}, 6), "S1 S2 braid relation not found");
  out.expect(free_words_check({matrix_t()}, 12), "T has finite order");
  out.note("commutation graph n=3,4,5; Smith forms; matrix relations");
}

std::vector<Check> all_checks() {
  std::vector<Check> checks{
      {"criterion.01.word-problem", word_problem},
      {"criterion.02.structure-agreement", two_structures},
      {"criterion.03.garside-combinatorics", garside_combinatorics},
      {"criterion.04.cabled-half-twists", cabling_powers},
      {"criterion.05.four-strand-identities", four_strand_identities},
      {"criterion.06.linking-numbers", linking},
      {"criterion.07.kernel-abelianization", kernel_reproduction},
      {"criterion.08.j-rank", rank_formula},
      {"criterion.09.conjugacy", conjugacy},
      {"criterion.10.atom-pairs", atom_pair_standardization},
      {"criterion.11.atom-conjugate-shape", atom_conjugate_shapes},
      {"criterion.12.product-dichotomy", product_dichotomy_suite},
      {"criterion.13.characters", characters},
      {"criterion.14.s6-automorphism", nu_check},
      {"criterion.15.pi-matrices", pi_matrices},
      {"criterion.16.cabling-round-trips", cabling_round_trips},
      {"k4-rewrite.soundness", k4_rewrite_soundness},
      {"kernel-ab.coordinates", coordinate_additivity},
      {"presentation.b4prime-relators",
       [](Context& ctx, Outcome& out) {
         b4prime_relators(active_b4prime(ctx), out);
         out.note("relators are braid identities");
       }},
      {"subgroup.j-projection", j4_to_j3},
      {"subgroup.matrices-and-graphs", misc_subgroup},
  };
  for (const char* name : {"ucu", "uwu", "tct", "twt"}) {
    checks.push_back({std::string("k4-action.") + name,
                      [name](Context&, Outcome& out) { k4_relation_check(name, out); }});
  }
  std::sort(checks.begin(), checks.end(), [](const Check& a, const Check& b) { return a.id < b.id; });
  return checks;
}

CheckResult run_one(const Check& check, const LedgerOptions& options) {
  CheckResult r;
  r.id = check.id;
  const auto t0 = Clock::now();
  Context ctx{options, Rng(options.seed, check.id)};
  Outcome out;
  try {
    check.run(ctx, out);
  } catch (const std::exception& e) {
    out.fail(std::string("exception: ") + e.what());
  }
  r.elapsed_ms = ms_since(t0);
  r.status = out.pass ? CheckStatus::Pass : CheckStatus::Fail;
  r.details = join(out.notes, "; ");
  r.counterexample = out.counterexample;
  return r;
}

}  // namespace

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "unknown";
}

std::vector<std::string> ledger_check_ids() {
  std::vector<std::string> ids;
  for (const auto& c : all_checks()) ids.push_back(c.id);
  return ids;
}

bool filter_matches(const std::string& filter, const std::string& id) {
  if (filter.find_first_of("*?[") != std::string::npos) {
    return fnmatch(filter.c_str(), id.c_str(), 0) == 0;
  }
  return id == filter || id.rfind(filter + ".", 0) == 0;
}

std::vector<CheckResult> run_ledger(const LedgerOptions& options) {
  std::vector<Check> selected;
  for (auto& c : all_checks()) {
    if (!options.filter || filter_matches(*options.filter, c.id)) selected.push_back(std::move(c));
  }
  if (selected.empty()) throw PreconditionError("unknown check id '" + options.filter.value_or("") + "'");
  std::vector<CheckResult> results(selected.size());
  const int threads = std::max(1, options.threads);
  if (threads == 1) {
    for (std::size_t i = 0; i < selected.size(); ++i) results[i] = run_one(selected[i], options);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::future<void>> workers;
    for (int t = 0; t < threads; ++t) {
      workers.push_back(std::async(std::launch::async, [&] {
        for (std::size_t i = next++; i < selected.size(); i = next++) results[i] = run_one(selected[i], options);
      }));
    }
    for (auto& w : workers) w.get();
  }
  return results;
}

std::string ledger_json(const std::vector<CheckResult>& results, std::uint64_t seed, bool with_timing) {
  nlohmann::ordered_json report;
  report["seed"] = seed;
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  int passed = 0, failed = 0, skipped = 0;
  for (const auto& r : results) {
    nlohmann::ordered_json c;
    c["id"] = r.id;
    c["status"] = to_string(r.status);
    c["details"] = r.details;
    if (r.status == CheckStatus::Fail) c["counterexample"] = r.counterexample;
    if (with_timing) c["elapsed_ms"] = r.elapsed_ms;
    checks.push_back(std::move(c));
    passed += r.status == CheckStatus::Pass;
    failed += r.status == CheckStatus::Fail;
    skipped += r.status == CheckStatus::Skipped;
  }
  report["checks"] = std::move(checks);
  report["summary"] = {{"pass", passed}, {"fail", failed}, {"skipped", skipped}};
  return report.dump(2) + "\n";
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.status != CheckStatus::Fail; });
}

}  // namespace braidlab
