#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "braidlab/permutation.hpp"

namespace braidlab {

// An element of B_n written in Artin generators: letter k > 0 is sigma_k,
// letter k < 0 is sigma_|k|^-1. The empty word is the identity.
class BraidWord {
 public:
  BraidWord() : strands_(1) {}
  explicit BraidWord(int strands, std::vector<int> letters = {});

  // Text form "B<n>: l1 l2 ..."; format(parse(s)) reproduces canonical text.
  static BraidWord parse(std::string_view text);
  std::string to_string() const;

  int strands() const { return strands_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  BraidWord& append(const BraidWord& other);
  BraidWord& append_letter(int letter);

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
  friend auto operator<=>(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_;
  std::vector<int> letters_;
};

// Word algebra. Binary operations require equal strand counts.
BraidWord compose(const BraidWord& a, const BraidWord& b);
BraidWord inverse(const BraidWord& a);
// a^b = b^-1 a b.
BraidWord conjugate(const BraidWord& a, const BraidWord& b);
BraidWord power(const BraidWord& a, int k);
// Cancels adjacent x x^-1 pairs; does not use the braid relations.
BraidWord free_reduce(const BraidWord& a);

int exponent_sum(const BraidWord& w);

// mu(w), tracked left to right: mu(w)(i) is the starting position of the
// strand that ends at position i. mu(ab) = mu(a) * mu(b).
Permutation permutation_of(const BraidWord& w);

// sigma_1, sigma_3 -> sigma_1 and sigma_2 -> sigma_2, from B_4 to B_3.
BraidWord project_to_b3(const BraidWord& w);

// Deletes every strand whose starting position is outside `keep` (1-based,
// any order). `keep` must be invariant under permutation_of(w).
BraidWord delete_strands(const BraidWord& w, std::span<const int> keep);
// Same geometric operation without the invariance requirement: keeps the
// strands that start at the listed positions.
BraidWord delete_strands_by_start(const BraidWord& w, std::span<const int> keep);

}  // namespace braidlab
