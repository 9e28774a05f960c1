#pragma once

#include <optional>
#include <string>

#include "braidlab/braid_word.hpp"
#include "braidlab/garside_structure.hpp"
#include "braidlab/normal_form.hpp"
#include "braidlab/sliding.hpp"

namespace braidlab {

// Whether x is (the normal form of) an atom, and which one.
std::optional<Simple> as_atom(const GarsideStructure& g, const NormalForm& x);

// Check of the palindromic shape delta^-p A_p ... A_1 x B_1 ... B_p with
// A_i delta^(i-1) B_i = delta^i, expected for conjugates of an atom.
struct AtomConjugateShape {
  bool holds = false;
  int p = 0;
  std::string detail;  // first violated condition
};
AtomConjugateShape atom_conjugate_shape(const GarsideStructure& g, const NormalForm& x);

// u with x^u and y^u both atoms, for conjugates x, y of atoms satisfying
// xyx = yxy. Peels the outer factor pair of x one step at a time.
struct AtomPairResult {
  BraidWord u;
  Simple x;  // x^u
  Simple y;  // y^u
};
std::optional<AtomPairResult> reduce_to_atom_pair(const GarsideStructure& g, const BraidWord& x,
                                                  const BraidWord& y,
                                                  const SlidingCircuitOptions& options = {});

// u with the atoms x^u = sigma_1 and y^u = sigma_2, searching over ordered
// atom pairs joined by conjugation with simples and their inverses.
std::optional<BraidWord> align_atom_pair(const GarsideStructure& g, const Simple& x,
                                         const Simple& y);

// For distinct conjugates x, y of sigma_1 with xyx = yxy: u with x^u = sigma_1
// and y^u = sigma_2, or nullopt. Throws PreconditionError if the braid
// relation fails.
std::optional<BraidWord> braid_pair_to_standard(const GarsideStructure& g, const BraidWord& x,
                                                const BraidWord& y,
                                                const SlidingCircuitOptions& options = {});

// For conjugates a, b of sigma_1 with a^k b^l conjugate to sigma_1^k sigma_2^l:
// u with a^u = sigma_1 and b^u = sigma_2, found through the sliding circuits
// of a^k b^l. Throws PreconditionError if the conjugacy hypothesis fails.
std::optional<BraidWord> power_pair_to_standard(const GarsideStructure& g, const BraidWord& a,
                                                const BraidWord& b, int k, int l,
                                                const SlidingCircuitOptions& options = {});

// Product dichotomy for X ~ x^k, Y ~ y^l, Z = XY: a conjugator u with either
// (i) X^u, Y^u powers of atoms, or (ii) l(Z^u) = l(X^u) + l(Y^u) and Z^u in SC(Z).
// Candidates are the conjugators along every edge of SC(Z) explored by
// conjugation with simples.
struct DichotomyWitness {
  enum class Case { AtomPowers, AdditiveOnCircuit } which;
  BraidWord u;
};
std::optional<DichotomyWitness> product_dichotomy(const GarsideStructure& g, const BraidWord& x,
                                                  int k, const BraidWord& y, int l,
                                                  const SlidingCircuitOptions& options = {});

}  // namespace braidlab
