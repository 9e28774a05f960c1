#pragma once

#include <vector>

#include "braidlab/integer_matrix.hpp"

namespace braidlab {

IntegerMatrix matrix_s1();  // [[1,-1],[0,1]]
IntegerMatrix matrix_s2();  // [[1,0],[1,1]]
IntegerMatrix matrix_t();   // S1^-1 S2
IntegerMatrix matrix_u();   // S2 S1^-1

// True iff no nonempty freely reduced word of length <= max_length over the
// generators and their inverses evaluates to the identity matrix.
// Generators must be square of a common size with determinant +-1.
bool free_words_check(const std::vector<IntegerMatrix>& generators, int max_length);

// Connectivity of the graph on sigma_1..sigma_{n-1} joining commuting
// generators (|i - j| > 1).
bool commutation_graph_connected(int n);

}  // namespace braidlab
