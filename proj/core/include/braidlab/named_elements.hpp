#pragma once

#include "braidlab/braid_word.hpp"

namespace braidlab {

// Garside's half-twist: prod_{i=1}^{n-1} prod_{j=1}^{n-i} sigma_j.
BraidWord half_twist(int n);
// sigma_{n-1} ... sigma_1, the Garside element of the band structure.
BraidWord band_delta(int n);
// sigma_{ij} = sigma_{j-1} ... sigma_{i+1} sigma_i sigma_{i+1}^-1 ... sigma_{j-1}^-1.
BraidWord band_generator(int n, int i, int j);

// Free generators of B'_3 (n = 3) and the elements of B'_4 spanned by them.
BraidWord elem_u(int n = 3);  // sigma_2 sigma_1^-1
BraidWord elem_t(int n = 3);  // sigma_1^-1 sigma_2
BraidWord elem_v(int n = 3);  // sigma_1 sigma_2 sigma_1^-2
// K_4 generators, n = 4 only.
BraidWord elem_c();  // sigma_3 sigma_1^-1
BraidWord elem_w();  // sigma_2 c sigma_2^-1
// sigma_1^3 sigma_3^3 Delta^-1 in B_4.
BraidWord elem_d();
// psi_{2,n-2}(1; sigma_1^{(n-2)(n-3)}, Delta_{n-2}^-2), n >= 4.
BraidWord elem_tau(int n);

enum class NamedTag { Delta, BandGen, U, V, W, C, D, T, Tau };

// Dispatcher over the identities above; `i`, `j` are used only by BandGen.
BraidWord named_element(NamedTag tag, int n, int i = 0, int j = 0);

}  // namespace braidlab
