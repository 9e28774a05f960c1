#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace braidlab {

// Integer polynomial in commuting variables e_1, ..., e_n.
class Polynomial {
 public:
  using Monomial = std::vector<int>;  // exponent of e_i at index i-1

  explicit Polynomial(int variables = 0) : vars_(variables) {}
  static Polynomial constant(int variables, long long c);
  static Polynomial variable(int variables, int i);  // e_i, 1-based

  int variables() const { return vars_; }
  const std::map<Monomial, long long>& terms() const { return terms_; }
  std::string to_string() const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(long long c, const Polynomial& a);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void add_term(const Monomial& m, long long c);
  int vars_;
  std::map<Monomial, long long> terms_;  // no zero coefficients
};

// Both sides of
//   (n-2)(e_1-e_2)e_3 = (e_1-e_2)(e_3+...+e_n) + sum_{i>=4} (e_1-e_2)(e_3-e_i),
// which shows (e_1-e_2)e_3 lies in the sum of the two submodules of J_n^ab (x) C.
std::pair<Polynomial, Polynomial> generator_splitting_identity(int n);

}  // namespace braidlab
