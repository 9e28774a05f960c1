#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace braidlab {

// A weakly decreasing sequence of positive parts.
class Partition {
 public:
  Partition() = default;
  // Sorts the parts; throws PreconditionError on non-positive parts.
  explicit Partition(std::vector<int> parts);
  // "5,1" or "(5,1)".
  static Partition parse(std::string_view text);
  std::string to_string() const;

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int operator[](std::size_t i) const { return parts_[i]; }
  // Multiplicity of part value v.
  int multiplicity(int v) const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

// Partitions of n in reverse lexicographic order: (n), (n-1,1), ...
std::vector<Partition> partitions_of(int n);

long long factorial(int n);
// Number of standard tableaux of shape lambda, by the hook length formula.
long long hook_length_dimension(const Partition& lambda);
// Order of the centralizer of a permutation of cycle type mu.
long long centralizer_order(const Partition& mu);
// Size of the conjugacy class of cycle type mu in S_n.
long long class_size(const Partition& mu);
// Cycle type of g^k when g has cycle type mu.
Partition power_cycle_type(const Partition& mu, int k);

}  // namespace braidlab
