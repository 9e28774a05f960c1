#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace braidlab {

// A bijection of {1,...,n}. Stored 0-based; the public accessors are 1-based.
// Products compose as functions: (p * q)(i) = p(q(i)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int degree);  // identity
  // `images[i-1]` is the image of i; throws PreconditionError unless bijective.
  static Permutation from_images(std::vector<int> images_one_based);
  // Cycle notation such as "(1,2)(3,4)" or "(123456)"; "()" is the identity.
  static Permutation from_cycles(int degree, std::string_view text);
  static Permutation transposition(int degree, int i, int j);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i - 1] + 1; }
  int image0(int i) const { return images_[i]; }

  Permutation inverse() const;
  bool is_identity() const;
  bool is_even() const;
  int order() const;
  // Cycle lengths in weakly decreasing order, fixed points included.
  std::vector<int> cycle_type() const;
  std::vector<std::vector<int>> cycles() const;  // 1-based, fixed points omitted
  std::string to_string() const;

  friend Permutation operator*(const Permutation& p, const Permutation& q);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

}  // namespace braidlab
