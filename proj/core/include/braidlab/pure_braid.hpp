#pragma once

#include <optional>
#include <tuple>
#include <vector>

#include "braidlab/braid_word.hpp"

namespace braidlab {

// Pairwise linking numbers of a pure braid, indexed by starting positions.
class LinkingMatrix {
 public:
  explicit LinkingMatrix(int n);
  int strands() const { return n_; }
  // 1-based, symmetric, zero on the diagonal.
  long long at(int i, int j) const;
  void add(int i, int j, long long v);
  // (i, j, lk_ij) for i < j in lexicographic order.
  std::vector<std::tuple<int, int, long long>> triples() const;
  friend bool operator==(const LinkingMatrix&, const LinkingMatrix&) = default;

 private:
  int n_;
  std::vector<long long> entries_;
};

// Throws PreconditionError unless w is pure.
LinkingMatrix linking_matrix(const BraidWord& w);

enum class Subgroup { Pure, Commutator, J };
bool membership(const BraidWord& w, Subgroup which);

// Coordinates lk_ij over pairs i < j (lexicographic). For Subgroup::J the
// input must also have exponent sum zero and n >= 5.
std::vector<long long> abelianize_pure(const BraidWord& w, Subgroup target = Subgroup::Pure);

// Pairs (i, j), i < j, in the coordinate order of abelianize_pure.
std::vector<std::pair<int, int>> strand_pairs(int n);

// d with w = Delta^(2d), or nullopt when w is not a power of Delta^2.
std::optional<int> periodic_degree(const BraidWord& w);

}  // namespace braidlab
