#include "braidlab/pure_braid.hpp"

#include <cstdlib>
#include <numeric>

#include "braidlab/error.hpp"
#include "braidlab/garside_structure.hpp"
#include "braidlab/normal_form.hpp"

namespace braidlab {

LinkingMatrix::LinkingMatrix(int n) : n_(n), entries_(static_cast<std::size_t>(n) * n, 0) {}

long long LinkingMatrix::at(int i, int j) const {
  return entries_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)];
}

void LinkingMatrix::add(int i, int j, long long v) {
  if (i == j) return;
  entries_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)] += v;
  entries_[static_cast<std::size_t>(j - 1) * n_ + (i - 1)] += v;
}

std::vector<std::tuple<int, int, long long>> LinkingMatrix::triples() const {
  std::vector<std::tuple<int, int, long long>> out;
  for (int i = 1; i <= n_; ++i) {
    for (int j = i + 1; j <= n_; ++j) out.emplace_back(i, j, at(i, j));
  }
  return out;
}

LinkingMatrix linking_matrix(const BraidWord& w) {
  if (!permutation_of(w).is_identity()) {
    throw PreconditionError("linking numbers need a pure braid");
  }
  const int n = w.strands();
  // Count crossing signs in half units, then halve.
  LinkingMatrix twice(n);
  std::vector<int> at(n);
  std::iota(at.begin(), at.end(), 1);
  for (int x : w.letters()) {
    const int k = std::abs(x);
    twice.add(at[k - 1], at[k], x > 0 ? 1 : -1);
    std::swap(at[k - 1], at[k]);
  }
  LinkingMatrix lk(n);
  for (auto [i, j, v] : twice.triples()) {
    if (v % 2 != 0) throw Error("internal error: odd crossing count in a pure braid");
    lk.add(i, j, v / 2);
  }
  return lk;
}

bool membership(const BraidWord& w, Subgroup which) {
  const bool pure = permutation_of(w).is_identity();
  const bool commutator = exponent_sum(w) == 0;
  switch (which) {
    case Subgroup::Pure:
      return pure;
    case Subgroup::Commutator:
      return commutator;
    case Subgroup::J:
      return pure && commutator;
  }
  return false;
}

std::vector<std::pair<int, int>> strand_pairs(int n) {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) out.emplace_back(i, j);
  }
  return out;
}

std::vector<long long> abelianize_pure(const BraidWord& w, Subgroup target) {
  if (target == Subgroup::Commutator) {
    throw PreconditionError("abelianization targets are the pure and J subgroups");
  }
  if (target == Subgroup::J) {
    if (exponent_sum(w) != 0) throw PreconditionError("J coordinates need exponent sum zero");
    if (w.strands() < 5) {
      throw PreconditionError("linking coordinates describe J_n^ab only for n >= 5");
    }
  }
  std::vector<long long> out;
  for (auto [i, j, v] : linking_matrix(w).triples()) out.push_back(v);
  return out;
}

std::optional<int> periodic_degree(const BraidWord& w) {
  const ClassicalStructure g(w.strands());
  const NormalForm nf = normal_form(g, w);
  if (!nf.factors.empty()) return std::nullopt;
  if (w.strands() <= 1) return 0;
  if (nf.inf % 2 != 0) return std::nullopt;
  return nf.inf / 2;
}

}  // namespace braidlab
