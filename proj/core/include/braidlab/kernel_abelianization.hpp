#pragma once

#include <optional>
#include <string>
#include <vector>

#include "braidlab/integer_matrix.hpp"
#include "braidlab/presentation.hpp"

namespace braidlab {

// Abelianization of ker(f) for a finitely presented group and a map f onto a
// finite permutation group, by Reidemeister-Schreier rewriting over the
// Cayley graph of the image.
class KernelAbelianization {
 public:
  // Throws PreconditionError if a relator has nontrivial image, if the image
  // group exceeds max_order, or if its order differs from expected_order.
  static KernelAbelianization compute(const FinitePresentation& p, const FiniteImageMap& f,
                                      std::optional<std::size_t> expected_order = std::nullopt,
                                      std::size_t max_order = 100000);

  // Torsion coefficients > 1 followed by one 0 per free factor.
  const std::vector<long long>& invariant_factors() const { return invariants_; }
  int free_rank() const;
  std::size_t index() const { return elements_.size(); }
  std::size_t schreier_generator_count() const { return free_columns_.size(); }
  std::size_t relator_row_count() const { return relation_rows_; }

  // Transversal word of each coset, in breadth-first shortlex order.
  const std::vector<FreeWord>& transversal() const { return transversal_; }
  bool in_kernel(const FreeWord& w) const;
  // Coordinates in the decomposition given by invariant_factors(): torsion
  // entries reduced modulo their factor, then free coordinates.
  // Throws PreconditionError for words outside the kernel.
  std::vector<long long> coordinates(const FreeWord& w) const;

 private:
  std::size_t coset_of(const Permutation& p) const;
  std::vector<long long> schreier_vector(const FreeWord& w, std::size_t start) const;

  FiniteImageMap map_;
  int rank_ = 0;
  std::vector<Permutation> elements_;  // sorted for lookup
  std::vector<std::size_t> order_;     // elements_ index -> BFS position
  std::vector<FreeWord> transversal_;  // by BFS position
  std::vector<std::vector<std::size_t>> step_;  // [coset][generator] -> coset
  std::vector<std::vector<std::size_t>> back_;  // [coset][generator] -> coset * g^-1
  std::vector<long long> column_of_;   // [coset * rank + generator] -> column or -1
  std::vector<std::size_t> free_columns_;
  std::size_t relation_rows_ = 0;
  IntegerMatrix v_;
  std::vector<long long> diagonal_;
  std::vector<long long> invariants_;
};

// True iff the coordinate vectors of the elements form a square matrix of
// determinant +-1 in a free abelian kernel abelianization.
bool basis_check(const KernelAbelianization& k, const std::vector<FreeWord>& elements);

}  // namespace braidlab
