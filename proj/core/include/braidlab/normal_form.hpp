#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "braidlab/braid_word.hpp"
#include "braidlab/garside_structure.hpp"

namespace braidlab {

enum class Side { Left, Right };

// Left form: X = delta^inf F_1 ... F_r, left-weighted.
// Right form: X = F_1 ... F_r delta^inf, right-weighted.
// Factors are proper simples (neither trivial nor delta).
struct NormalForm {
  StructureKind kind = StructureKind::Classical;
  Side side = Side::Left;
  int strands = 1;
  int inf = 0;
  std::vector<Simple> factors;

  int canonical_length() const { return static_cast<int>(factors.size()); }
  int sup() const { return inf + canonical_length(); }
  bool is_identity() const { return inf == 0 && factors.empty(); }

  friend bool operator==(const NormalForm&, const NormalForm&) = default;
  friend auto operator<=>(const NormalForm&, const NormalForm&) = default;
};

struct NormalFormHash {
  std::size_t operator()(const NormalForm& nf) const;
};

NormalForm normal_form(const GarsideStructure& g, const BraidWord& w, Side side = Side::Left);
bool words_equal(const GarsideStructure& g, const BraidWord& a, const BraidWord& b);

// Artin word reassembled from a form of either side.
BraidWord to_word(const GarsideStructure& g, const NormalForm& nf);

// Arithmetic on left normal forms.
NormalForm nf_identity(const GarsideStructure& g);
NormalForm nf_delta_power(const GarsideStructure& g, int k);
NormalForm nf_of_simple(const GarsideStructure& g, const Simple& s);
NormalForm nf_multiply(const GarsideStructure& g, const NormalForm& a, const NormalForm& b);
NormalForm nf_inverse(const GarsideStructure& g, const NormalForm& a);
// a^b = b^-1 a b.
NormalForm nf_conjugate(const GarsideStructure& g, const NormalForm& a, const NormalForm& b);
NormalForm nf_conjugate_by_simple(const GarsideStructure& g, const NormalForm& a, const Simple& s);
NormalForm nf_multiply_simple(const GarsideStructure& g, const NormalForm& a, const Simple& s);
NormalForm nf_left_multiply_simple(const GarsideStructure& g, const Simple& s, const NormalForm& a);
NormalForm nf_left_multiply_simple_inverse(const GarsideStructure& g, const Simple& s,
                                           const NormalForm& a);
NormalForm nf_multiply_simple_inverse(const GarsideStructure& g, const NormalForm& a,
                                      const Simple& s);

NormalForm to_right_form(const GarsideStructure& g, const NormalForm& left);

// Pairwise weightedness predicates.
bool is_left_weighted(const GarsideStructure& g, const Simple& a, const Simple& b);
bool is_right_weighted(const GarsideStructure& g, const Simple& a, const Simple& b);

// Initial factor iota(X) = delta^inf F_1 delta^-inf and final factor F_r; both
// trivial when the canonical length is zero.
Simple initial_factor(const GarsideStructure& g, const NormalForm& x);
Simple final_factor(const GarsideStructure& g, const NormalForm& x);

}  // namespace braidlab
