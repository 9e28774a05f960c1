#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "braidlab/braid_word.hpp"

namespace testing_support {

inline braidlab::BraidWord random_word(std::mt19937_64& rng, int n, int max_len, int min_len = 0) {
  braidlab::BraidWord w(n);
  if (n < 2) return w;
  std::uniform_int_distribution<int> len(min_len, max_len), gen(1, n - 1), sign(0, 1);
  const int l = len(rng);
  for (int i = 0; i < l; ++i) {
    const int k = gen(rng);
    w.append_letter(sign(rng) ? k : -k);
  }
  return w;
}

// Unreduced Burau matrices modulo a prime at a fixed value of t. Equal braids
// give equal matrices; for n <= 3 the representation is faithful, so unequal
// braids give unequal matrices at a generic t.
class Burau {
 public:
  static constexpr std::uint64_t kPrime = 1000000007ULL;

  Burau(int n, std::uint64_t t) : n_(n), t_(t % kPrime) {
    t_inv_ = power(t_, kPrime - 2);
  }

  std::vector<std::uint64_t> evaluate(const braidlab::BraidWord& w) const {
    std::vector<std::uint64_t> m(static_cast<std::size_t>(n_ * n_), 0);
    for (int i = 0; i < n_; ++i) m[static_cast<std::size_t>(i * n_ + i)] = 1;
    for (int x : w.letters()) multiply_generator(m, x);
    return m;
  }

 private:
  static std::uint64_t power(std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    b %= kPrime;
    while (e) {
      if (e & 1) r = r * b % kPrime;
      b = b * b % kPrime;
      e >>= 1;
    }
    return r;
  }

  // m <- m * B(x); B(sigma_i) has block [[1-t, t], [1, 0]] at rows/cols i-1, i,
  // B(sigma_i^-1) has block [[0, 1], [1/t, 1 - 1/t]].
  void multiply_generator(std::vector<std::uint64_t>& m, int x) const {
    const int i = (x > 0 ? x : -x) - 1;
    std::uint64_t a, b, c, d;
    if (x > 0) {
      a = (1 + kPrime - t_) % kPrime; b = t_; c = 1; d = 0;
    } else {
      a = 0; b = 1; c = t_inv_; d = (1 + kPrime - t_inv_) % kPrime;
    }
    for (int r = 0; r < n_; ++r) {
      const std::uint64_t p = m[static_cast<std::size_t>(r * n_ + i)];
      const std::uint64_t q = m[static_cast<std::size_t>(r * n_ + i + 1)];
      m[static_cast<std::size_t>(r * n_ + i)] = (p * a + q * c) % kPrime;
      m[static_cast<std::size_t>(r * n_ + i + 1)] = (p * b + q * d) % kPrime;
    }
  }

  int n_;
  std::uint64_t t_;
  std::uint64_t t_inv_;
};

}  // namespace testing_support
