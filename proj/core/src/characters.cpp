#include "braidlab/characters.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <shared_mutex>

#include "braidlab/error.hpp"

namespace braidlab {

namespace {

// Beta-set recursion: removing a rim hook of length k moves one bead from b
// to b - k; the sign counts beads strictly between.
long long mn_recurse(std::set<int>& beta, const std::vector<int>& mu, std::size_t index) {
  if (index == mu.size()) return 1;
  const int k = mu[index];
  long long total = 0;
  const std::vector<int> beads(beta.begin(), beta.end());
  for (int b : beads) {
    const int target = b - k;
    if (target < 0 || beta.count(target)) continue;
    int between = 0;
    for (int c : beads) between += (c > target && c < b) ? 1 : 0;
    beta.erase(b);
    beta.insert(target);
    const long long rest = mn_recurse(beta, mu, index + 1);
    beta.erase(target);
    beta.insert(b);
    total += (between % 2 == 0 ? 1 : -1) * rest;
  }
  return total;
}

struct Cache {
  std::shared_mutex mutex;
  std::map<std::pair<Partition, Partition>, long long> values;
};

Cache& cache() {
  static Cache c;
  return c;
}

const std::vector<Partition>& classes_of(int n) {
  static std::shared_mutex mutex;
  static std::map<int, std::vector<Partition>> table;
  {
    std::shared_lock lock(mutex);
    auto it = table.find(n);
    if (it != table.end()) return it->second;
  }
  std::unique_lock lock(mutex);
  auto [it, inserted] = table.emplace(n, std::vector<Partition>{});
  if (inserted) it->second = partitions_of(n);
  return it->second;
}

}  // namespace

long long character_value(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) {
    throw PreconditionError("partition sizes differ: " + lambda.to_string() + " vs " +
                            mu.to_string());
  }
  auto key = std::make_pair(lambda, mu);
  Cache& c = cache();
  {
    std::shared_lock lock(c.mutex);
    auto it = c.values.find(key);
    if (it != c.values.end()) return it->second;
  }
  std::set<int> beta;
  const int r = lambda.length();
  for (int i = 0; i < r; ++i) beta.insert(lambda[static_cast<std::size_t>(i)] + (r - 1 - i));
  const long long value = mn_recurse(beta, mu.parts(), 0);
  std::unique_lock lock(c.mutex);
  c.values.emplace(std::move(key), value);
  return value;
}

long long CharacterVector::at(const Partition& mu) const {
  const auto& classes = classes_of(n);
  auto it = std::find(classes.begin(), classes.end(), mu);
  if (it == classes.end()) throw PreconditionError("cycle type " + mu.to_string() + " not in S_n");
  return values[static_cast<std::size_t>(it - classes.begin())];
}

CharacterVector irreducible_character(const Partition& lambda) {
  CharacterVector chi{lambda.size(), {}};
  for (const auto& mu : classes_of(lambda.size())) chi.values.push_back(character_value(lambda, mu));
  return chi;
}

CharacterVector trivial_character(int n) {
  return CharacterVector{n, std::vector<long long>(classes_of(n).size(), 1)};
}

CharacterVector natural_character(int n) {
  CharacterVector chi{n, {}};
  for (const auto& mu : classes_of(n)) chi.values.push_back(mu.multiplicity(1));
  return chi;
}

CharacterVector symmetric_square(const CharacterVector& chi) {
  CharacterVector out{chi.n, {}};
  const auto& classes = classes_of(chi.n);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const long long g = chi.values[i];
    const long long g2 = chi.at(power_cycle_type(classes[i], 2));
    out.values.push_back((g * g + g2) / 2);
  }
  return out;
}

CharacterVector operator+(const CharacterVector& a, const CharacterVector& b) {
  if (a.n != b.n) throw PreconditionError("characters of different degrees");
  CharacterVector out = a;
  for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] += b.values[i];
  return out;
}

CharacterVector operator-(const CharacterVector& a, const CharacterVector& b) {
  if (a.n != b.n) throw PreconditionError("characters of different degrees");
  CharacterVector out = a;
  for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] -= b.values[i];
  return out;
}

long long inner_product(const CharacterVector& a, const CharacterVector& b) {
  if (a.n != b.n) throw PreconditionError("characters of different degrees");
  const auto& classes = classes_of(a.n);
  long long sum = 0;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    sum += class_size(classes[i]) * a.values[i] * b.values[i];
  }
  const long long order = factorial(a.n);
  if (sum % order != 0) throw Error("inner product is not integral");
  return sum / order;
}

ModuleTarget parse_module_target(const std::string& name) {
  if (name == "sym2-standard" || name == "Sym2Standard") return ModuleTarget::Sym2Standard;
  if (name == "sym2-vn11" || name == "Sym2Vn11") return ModuleTarget::Sym2Vn11;
  if (name == "w" || name == "Wmodule") return ModuleTarget::Wmodule;
  throw ParseError("unknown module '" + name + "' (sym2-standard, sym2-vn11, w)");
}

CharacterVector module_character(ModuleTarget target, int n) {
  if (n < 4) throw PreconditionError("module decompositions need n >= 4");
  const CharacterVector v = natural_character(n);
  switch (target) {
    case ModuleTarget::Sym2Standard:
      return symmetric_square(v);
    case ModuleTarget::Sym2Vn11:
      return symmetric_square(irreducible_character(Partition({n - 1, 1})));
    case ModuleTarget::Wmodule:
      return symmetric_square(v) - v - trivial_character(n);
  }
  throw PreconditionError("unknown module target");
}

std::vector<std::pair<Partition, long long>> decompose(const CharacterVector& chi) {
  std::vector<std::pair<Partition, long long>> out;
  for (const auto& lambda : classes_of(chi.n)) {
    const long long m = inner_product(chi, irreducible_character(lambda));
    if (m != 0) out.emplace_back(lambda, m);
  }
  return out;
}

std::vector<std::pair<Partition, long long>> decompose(ModuleTarget target, int n) {
  return decompose(module_character(target, n));
}

}  // namespace braidlab
