#include "braidlab/kernel_abelianization.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>

#include "braidlab/error.hpp"

namespace braidlab {

KernelAbelianization KernelAbelianization::compute(const FinitePresentation& p,
                                                   const FiniteImageMap& f,
                                                   std::optional<std::size_t> expected_order,
                                                   std::size_t max_order) {
  f.check_relators(p);
  KernelAbelianization k;
  k.map_ = f;
  k.rank_ = p.rank();
  const auto rank = static_cast<std::size_t>(p.rank());
  const int degree = f.images.empty() ? 1 : f.images.front().degree();

  // Breadth-first search with letters ordered g1, g1^-1, g2, ... gives each
  // coset its shortlex-first representative.
  std::map<Permutation, std::size_t> position;
  std::vector<Permutation> by_position{Permutation(degree)};
  std::vector<std::pair<std::size_t, int>> parent{{0, 0}};
  position.emplace(by_position[0], 0);
  for (std::size_t head = 0; head < by_position.size(); ++head) {
    for (std::size_t g = 0; g < rank; ++g) {
      for (int sign : {1, -1}) {
        const Permutation& img = f.images[g];
        Permutation next = by_position[head] * (sign > 0 ? img : img.inverse());
        if (position.count(next)) continue;
        if (by_position.size() >= max_order) {
          throw PreconditionError("image group has more than " + std::to_string(max_order) +
                                  " elements");
        }
        position.emplace(next, by_position.size());
        by_position.push_back(std::move(next));
        parent.emplace_back(head, sign * static_cast<int>(g + 1));
      }
    }
  }
  if (expected_order && by_position.size() != *expected_order) {
    throw PreconditionError("image group has order " + std::to_string(by_position.size()) +
                            ", expected " + std::to_string(*expected_order));
  }
  const std::size_t cosets = by_position.size();

  k.transversal_.resize(cosets);
  k.transversal_[0] = FreeWord(p.rank(), {});
  for (std::size_t i = 1; i < cosets; ++i) {
    k.transversal_[i] = k.transversal_[parent[i].first] * FreeWord(p.rank(), {parent[i].second});
  }

  k.elements_.reserve(cosets);
  for (const auto& [perm, pos] : position) {
    k.elements_.push_back(perm);
    k.order_.push_back(pos);
  }

  k.step_.assign(cosets, std::vector<std::size_t>(rank));
  k.back_.assign(cosets, std::vector<std::size_t>(rank));
  k.column_of_.assign(cosets * rank, -1);
  for (std::size_t c = 0; c < cosets; ++c) {
    for (std::size_t g = 0; g < rank; ++g) {
      k.step_[c][g] = k.coset_of(by_position[c] * f.images[g]);
      k.back_[c][g] = k.coset_of(by_position[c] * f.images[g].inverse());
    }
  }
  // Schreier generator (c, g) = r_c g r_{cg}^-1 is trivial on tree edges.
  for (std::size_t c = 0; c < cosets; ++c) {
    for (std::size_t g = 0; g < rank; ++g) {
      const std::size_t to = k.step_[c][g];
      const FreeWord edge = k.transversal_[c] * FreeWord::generator(p.rank(), static_cast<int>(g) + 1);
      if (edge == k.transversal_[to]) continue;
      k.column_of_[c * rank + g] = static_cast<long long>(k.free_columns_.size());
      k.free_columns_.push_back(c * rank + g);
    }
  }

  const int cols = static_cast<int>(k.free_columns_.size());
  std::vector<std::vector<long long>> rows;
  for (std::size_t c = 0; c < cosets; ++c) {
    for (const auto& r : p.relators) {
      std::vector<long long> row = k.schreier_vector(r, c);
      if (std::any_of(row.begin(), row.end(), [](long long x) { return x != 0; })) {
        rows.push_back(std::move(row));
      }
    }
  }
  k.relation_rows_ = rows.size();
  IntegerMatrix m(static_cast<int>(rows.size()), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (int j = 0; j < cols; ++j) m.at(static_cast<int>(i), j) = rows[i][static_cast<std::size_t>(j)];
  }
  SmithForm s = smith_normal_form(m);
  k.v_ = s.v;
  k.diagonal_ = s.diagonal;
  k.invariants_ = abelian_invariants(s, cols);
  return k;
}

int KernelAbelianization::free_rank() const {
  return static_cast<int>(std::count(invariants_.begin(), invariants_.end(), 0));
}

std::size_t KernelAbelianization::coset_of(const Permutation& p) const {
  const auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || !(*it == p)) throw Error("permutation outside the image group");
  return order_[static_cast<std::size_t>(it - elements_.begin())];
}

std::vector<long long> KernelAbelianization::schreier_vector(const FreeWord& w,
                                                            std::size_t start) const {
  const auto rank = static_cast<std::size_t>(rank_);
  std::vector<long long> v(free_columns_.size(), 0);
  std::size_t cur = start;
  for (int x : w.letters()) {
    const auto g = static_cast<std::size_t>(std::abs(x) - 1);
    if (x > 0) {
      const long long col = column_of_[cur * rank + g];
      if (col >= 0) v[static_cast<std::size_t>(col)] += 1;
      cur = step_[cur][g];
    } else {
      const std::size_t from = back_[cur][g];
      const long long col = column_of_[from * rank + g];
      if (col >= 0) v[static_cast<std::size_t>(col)] -= 1;
      cur = from;
    }
  }
  return v;
}

bool KernelAbelianization::in_kernel(const FreeWord& w) const {
  return map_.image_of(w).is_identity();
}

std::vector<long long> KernelAbelianization::coordinates(const FreeWord& w) const {
  if (w.rank() != rank_) throw PreconditionError("word is over a different generator set");
  if (!in_kernel(w)) throw PreconditionError("element is not in the kernel");
  const std::vector<long long> x = schreier_vector(w, 0);
  const int n = static_cast<int>(x.size());
  std::vector<long long> y(x.size(), 0);
  for (int j = 0; j < n; ++j) {
    long long acc = 0;
    for (int i = 0; i < n; ++i) acc = checked_add(acc, checked_mul(x[static_cast<std::size_t>(i)], v_.at(i, j)));
    y[static_cast<std::size_t>(j)] = acc;
  }
  std::vector<long long> torsion, free;
  for (int j = 0; j < n; ++j) {
    const long long d = static_cast<std::size_t>(j) < diagonal_.size() ? diagonal_[static_cast<std::size_t>(j)] : 0;
    const long long value = y[static_cast<std::size_t>(j)];
    if (d == 1) continue;
    if (d == 0) {
      free.push_back(value);
    } else {
      torsion.push_back(((value % d) + d) % d);
    }
  }
  torsion.insert(torsion.end(), free.begin(), free.end());
  return torsion;
}

bool basis_check(const KernelAbelianization& k, const std::vector<FreeWord>& elements) {
  if (k.free_rank() != static_cast<int>(k.invariant_factors().size())) {
    throw PreconditionError("kernel abelianization has torsion; no free basis exists");
  }
  std::vector<std::vector<long long>> rows;
  for (const auto& e : elements) rows.push_back(k.coordinates(e));
  if (rows.size() != k.invariant_factors().size()) return false;
  const long long det = IntegerMatrix(rows).determinant();
  return det == 1 || det == -1;
}

}  // namespace braidlab
