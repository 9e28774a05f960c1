#pragma once

#include <string>
#include <utility>
#include <vector>

#include "braidlab/partition.hpp"

namespace braidlab {

// chi_lambda on the class of cycle type mu (Murnaghan-Nakayama).
long long character_value(const Partition& lambda, const Partition& mu);

// A class function of S_n, one value per cycle type in partitions_of(n) order.
struct CharacterVector {
  int n = 0;
  std::vector<long long> values;

  long long at(const Partition& mu) const;
  friend bool operator==(const CharacterVector&, const CharacterVector&) = default;
};

CharacterVector irreducible_character(const Partition& lambda);
CharacterVector trivial_character(int n);
// Character of the permutation representation on C^n.
CharacterVector natural_character(int n);
CharacterVector symmetric_square(const CharacterVector& chi);
CharacterVector operator+(const CharacterVector& a, const CharacterVector& b);
CharacterVector operator-(const CharacterVector& a, const CharacterVector& b);

// (1/n!) sum over classes |C| a(C) b(C); throws if the result is not integral.
long long inner_product(const CharacterVector& a, const CharacterVector& b);

enum class ModuleTarget { Sym2Standard, Sym2Vn11, Wmodule };
ModuleTarget parse_module_target(const std::string& name);
CharacterVector module_character(ModuleTarget target, int n);

// Irreducible constituents with nonzero multiplicity, in partitions_of order.
std::vector<std::pair<Partition, long long>> decompose(const CharacterVector& chi);
std::vector<std::pair<Partition, long long>> decompose(ModuleTarget target, int n);

}  // namespace braidlab
