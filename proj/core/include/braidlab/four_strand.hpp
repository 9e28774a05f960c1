#pragma once

#include <vector>

#include "braidlab/automorphism.hpp"
#include "braidlab/braid_word.hpp"
#include "braidlab/free_group.hpp"
#include "braidlab/integer_matrix.hpp"
#include "braidlab/kernel_abelianization.hpp"
#include "braidlab/presentation.hpp"

namespace braidlab {

// K_4 = ker(B_4 -> B_3) is free on c (letter 1) and w (letter 2);
// B'_3 is free on u (letter 1) and t (letter 2).
const std::vector<std::string>& k4_names();
const std::vector<std::string>& b3prime_names();

// Replaces letter k of x by gens[k-1] (inverse for negative letters).
BraidWord substitute_braids(const FreeWord& x, const std::vector<BraidWord>& gens);
BraidWord k4_substitute(const FreeWord& x);
BraidWord b3prime_substitute(const FreeWord& x, int n = 3);

// Conjugation actions x -> g x g^-1 on <c,w>. The u, t and sigma_1 actions
// are axioms; sigma_2 = u sigma_1 gives the sigma_2 action.
struct K4Actions {
  FreeGroupAutomorphism by_u;
  FreeGroupAutomorphism by_t;
  FreeGroupAutomorphism by_sigma1;
  FreeGroupAutomorphism by_sigma2;
};
const K4Actions& k4_actions();

// Rewrites a 4-strand braid whose B_3 projection is trivial as a word in c, w.
// Throws PreconditionError for a nontrivial projection and Error if the
// substituted result is not equal to the input.
FreeWord k4_rewrite(const BraidWord& x);

// sigma_1-conjugation on B'_3 = <u,t>.
const FreeGroupAutomorphism& b3prime_sigma1_tilde();
// Rewrites a 3-strand braid with zero exponent sum as a word in u, t.
FreeWord b3prime_rewrite(const BraidWord& x);

// Matrix of v -> x v x^-1 on K_4^ab in the basis (c, w); columns are images.
// Throws PreconditionError unless x is a 4-strand braid of exponent sum 0.
IntegerMatrix k4_action_matrix(const BraidWord& x);
// Induced matrix on B'_3^ab in the basis (u, t); columns are images.
IntegerMatrix b3prime_action_matrix(const FreeGroupAutomorphism& phi);
// Same for an automorphism of B_3 restricted to B'_3.
IntegerMatrix b3prime_action_matrix(const AutomorphismSpec& phi);

// Presentation of B'_4 on u, v, w, c with v = t^-1 u, and the braid words of
// its generators.
FinitePresentation b4prime_presentation();
std::vector<BraidWord> b4prime_generator_braids();
// Generator images under the permutation map.
FiniteImageMap b4prime_image_map();
// Free B'_3 on u, t with its permutation map (image of order 3).
FinitePresentation b3prime_presentation();
FiniteImageMap b3prime_image_map();

// E_3 = {ut, tu, u^3, t^3} over the B'_3 presentation; E_4 adds c^2, w^2,
// (cw)^2 over the B'_4 presentation (t = u v^-1).
std::vector<FreeWord> basis_e3();
std::vector<FreeWord> basis_e4();

}  // namespace braidlab
