#pragma once

#include "braidlab/permutation.hpp"

namespace braidlab {

// The automorphism nu of S_6 given by (12) -> (12)(34)(56) and
// (123456) -> (123)(45), evaluated through a factorization of the argument
// over the two generators.
Permutation nu_map(const Permutation& g);

struct NuReport {
  bool homomorphism = false;  // nu(xy) = nu(x) nu(y) for all 720^2 pairs
  bool bijective = false;
  bool preserves_transpositions = false;  // true would mean nu is inner
  int elements = 0;
};
NuReport verify_nu();

}  // namespace braidlab
