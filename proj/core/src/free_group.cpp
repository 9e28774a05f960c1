#include "braidlab/free_group.hpp"

#include <cstdlib>

#include "braidlab/error.hpp"

namespace braidlab {

namespace {

void push_reduced(std::vector<int>& out, int x) {
  if (!out.empty() && out.back() == -x) {
    out.pop_back();
  } else {
    out.push_back(x);
  }
}

void require_rank(const FreeWord& a, const FreeWord& b) {
  if (a.rank() != b.rank()) throw PreconditionError("free words of different rank");
}

}  // namespace

FreeWord::FreeWord(int rank, std::vector<int> letters) : rank_(rank) {
  if (rank < 0) throw PreconditionError("negative free group rank");
  for (int x : letters) {
    if (x == 0 || std::abs(x) > rank) throw PreconditionError("free letter out of range");
    push_reduced(letters_, x);
  }
}

FreeWord FreeWord::generator(int rank, int k) { return FreeWord(rank, {k}); }

std::string FreeWord::to_string(const std::vector<std::string>& names) const {
  if (letters_.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < letters_.size();) {
    std::size_t j = i;
    while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
    const int x = letters_[i];
    const auto k = static_cast<std::size_t>(std::abs(x) - 1);
    const std::string name = k < names.size() ? names[k] : "x" + std::to_string(k + 1);
    if (!out.empty()) out += '*';
    out += name;
    const int e = static_cast<int>(j - i) * (x > 0 ? 1 : -1);
    if (e != 1) out += "^" + std::to_string(e);
    i = j;
  }
  return out;
}

FreeWord operator*(const FreeWord& a, const FreeWord& b) {
  require_rank(a, b);
  std::vector<int> letters = a.letters();
  for (int x : b.letters()) push_reduced(letters, x);
  return FreeWord(a.rank(), std::move(letters));
}

FreeWord inverse(const FreeWord& a) {
  std::vector<int> letters(a.letters().rbegin(), a.letters().rend());
  for (int& x : letters) x = -x;
  return FreeWord(a.rank(), std::move(letters));
}

FreeWord power(const FreeWord& a, int k) {
  const FreeWord base = k < 0 ? inverse(a) : a;
  FreeWord r(a.rank(), {});
  for (int i = 0; i < std::abs(k); ++i) r = r * base;
  return r;
}

FreeWord free_conjugate(const FreeWord& x, const FreeWord& by) { return by * x * inverse(by); }

std::vector<long long> abelianize(const FreeWord& w) {
  std::vector<long long> v(static_cast<std::size_t>(w.rank()), 0);
  for (int x : w.letters()) v[static_cast<std::size_t>(std::abs(x) - 1)] += x > 0 ? 1 : -1;
  return v;
}

FreeGroupAutomorphism::FreeGroupAutomorphism(std::vector<FreeWord> images)
    : images_(std::move(images)) {
  for (const auto& w : images_) {
    if (w.rank() != rank()) throw PreconditionError("image in a free group of different rank");
  }
}

FreeGroupAutomorphism FreeGroupAutomorphism::identity(int rank) {
  std::vector<FreeWord> images;
  for (int k = 1; k <= rank; ++k) images.push_back(FreeWord::generator(rank, k));
  return FreeGroupAutomorphism(std::move(images));
}

FreeWord FreeGroupAutomorphism::apply(const FreeWord& w) const {
  if (w.rank() != rank()) throw PreconditionError("word rank differs from automorphism rank");
  std::vector<int> out;
  for (int x : w.letters()) {
    const FreeWord& img = images_[static_cast<std::size_t>(std::abs(x) - 1)];
    if (x > 0) {
      for (int y : img.letters()) push_reduced(out, y);
    } else {
      for (auto it = img.letters().rbegin(); it != img.letters().rend(); ++it) push_reduced(out, -*it);
    }
  }
  return FreeWord(rank(), std::move(out));
}

FreeGroupAutomorphism FreeGroupAutomorphism::after(const FreeGroupAutomorphism& other) const {
  if (other.rank() != rank()) throw PreconditionError("automorphism ranks differ");
  std::vector<FreeWord> images;
  for (const auto& w : other.images_) images.push_back(apply(w));
  return FreeGroupAutomorphism(std::move(images));
}

FreeGroupAutomorphism FreeGroupAutomorphism::inverse(int max_length) const {
  const int r = rank();
  std::size_t found = 0;
  std::vector<bool> have(static_cast<std::size_t>(r), false);
  std::vector<FreeWord> preimage(static_cast<std::size_t>(r));

  // Layered enumeration of reduced words, carrying their images.
  std::vector<std::pair<FreeWord, FreeWord>> layer{{FreeWord(r, {}), FreeWord(r, {})}};
  for (int len = 1; len <= max_length && found < static_cast<std::size_t>(r); ++len) {
    std::vector<std::pair<FreeWord, FreeWord>> next;
    for (const auto& [word, img] : layer) {
      for (int x = -r; x <= r; ++x) {
        if (x == 0) continue;
        if (!word.letters().empty() && word.letters().back() == -x) continue;
        FreeWord w2 = word * FreeWord(r, {x});
        FreeWord i2 = img * apply(FreeWord(r, {x}));
        if (i2.length() == 1 && i2.letters()[0] > 0) {
          const auto k = static_cast<std::size_t>(i2.letters()[0] - 1);
          if (!have[k]) {
            have[k] = true;
            preimage[k] = w2;
            ++found;
          }
        }
        next.emplace_back(std::move(w2), std::move(i2));
      }
    }
    layer = std::move(next);
  }
  if (found < static_cast<std::size_t>(r)) {
    throw PreconditionError("no inverse found within length " + std::to_string(max_length));
  }
  FreeGroupAutomorphism inv(std::move(preimage));
  if (!(after(inv) == identity(r))) throw Error("preimage search produced a non-inverse");
  return inv;
}

}  // namespace braidlab
