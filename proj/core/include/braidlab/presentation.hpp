#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "braidlab/free_group.hpp"
#include "braidlab/permutation.hpp"

namespace braidlab {

// Words are products of generator names joined by '*' or '/' (a/b = a*b^-1),
// with optional exponents x^k and parentheses, e.g. "u*c/u/w" or "(c*w)^2".
struct FinitePresentation {
  std::vector<std::string> generators;
  std::vector<FreeWord> relators;

  int rank() const { return static_cast<int>(generators.size()); }
  FreeWord parse_word(std::string_view text) const;
  std::string format(const FreeWord& w) const { return w.to_string(generators); }

  // First content line lists generator names (space or comma separated, an
  // optional "generators:" prefix is ignored); each further line is a relator.
  // '#' starts a comment.
  static FinitePresentation parse(std::string_view text);
  std::string to_text() const;
};

// Images of the generators in a finite permutation group; word images are
// products in word order.
struct FiniteImageMap {
  std::vector<Permutation> images;

  Permutation image_of(const FreeWord& w) const;
  // Throws PreconditionError naming the first relator with nontrivial image.
  void check_relators(const FinitePresentation& p) const;
};

}  // namespace braidlab
