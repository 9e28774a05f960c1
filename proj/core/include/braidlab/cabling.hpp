#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "braidlab/braid_word.hpp"

namespace braidlab {

// Block widths m_1, ..., m_k with n = sum m_i.
class Composition {
 public:
  explicit Composition(std::vector<int> parts);
  // "2,2,1"
  static Composition parse(std::string_view text);
  std::string to_string() const;

  const std::vector<int>& parts() const { return parts_; }
  int blocks() const { return static_cast<int>(parts_.size()); }
  int total() const { return total_; }
  // First position (1-based) of block i (1-based) in the initial arrangement.
  int block_start(int i) const;
  // Block label of every position: 1,...,1,2,...,2,...
  std::vector<int> label_vector() const;

  friend bool operator==(const Composition&, const Composition&) = default;

 private:
  std::vector<int> parts_;
  int total_ = 0;
};

// All compositions of n, in lexicographic order of parts.
std::vector<Composition> compositions_of(int n);

// psi_m(tubular; interiors): tube letters expand to block crossings, interior
// braids are placed at the start on their initial blocks.
BraidWord cable(const BraidWord& tubular, const std::vector<BraidWord>& interiors,
                const Composition& m);

// mu(w) preserves the block labels.
bool mixed_membership(const BraidWord& w, const Composition& m);

// Recover the tubular braid and the interior braid of block i (1-based);
// throw NotTubePreserving unless w re-cables from its parts.
BraidWord extract_tubular(const BraidWord& w, const Composition& m);
BraidWord extract_interior(const BraidWord& w, const Composition& m, int i);

}  // namespace braidlab
