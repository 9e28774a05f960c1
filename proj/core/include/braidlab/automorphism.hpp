#pragma once

#include <string>
#include <vector>

#include "braidlab/braid_word.hpp"

namespace braidlab {

// A composite of elementary automorphisms of B_n, applied right to left.
// Inner automorphisms follow the tilde convention g~(x) = g x g^-1.
class AutomorphismSpec {
 public:
  enum class Kind { Lambda, Inner, SigmaTilde, DeltaTilde };

  struct Factor {
    Kind kind;
    BraidWord conjugator;  // Inner only
    int index = 0;         // SigmaTilde only
  };

  AutomorphismSpec() = default;

  static AutomorphismSpec lambda();
  static AutomorphismSpec inner(BraidWord g);
  static AutomorphismSpec sigma_tilde(int i);
  static AutomorphismSpec delta_tilde();
  // Lambda o sigma_1~ o sigma_3~ o Delta~ on B_4.
  static AutomorphismSpec phi();

  // (*this) o other.
  AutomorphismSpec then_after(const AutomorphismSpec& other) const;

  const std::vector<Factor>& factors() const { return factors_; }
  std::string describe() const;

 private:
  std::vector<Factor> factors_;  // leftmost factor is applied last
};

BraidWord apply_automorphism(const AutomorphismSpec& spec, const BraidWord& w);

}  // namespace braidlab
