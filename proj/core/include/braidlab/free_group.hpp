#pragma once

#include <string>
#include <vector>

namespace braidlab {

// Element of a free group of given rank. Letter +k / -k is generator k
// (1-based) or its inverse. Stored freely reduced.
class FreeWord {
 public:
  FreeWord() = default;
  FreeWord(int rank, std::vector<int> letters);
  static FreeWord generator(int rank, int k);

  int rank() const { return rank_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }

  // Names indexed by generator - 1; inverses print as name^-1.
  std::string to_string(const std::vector<std::string>& names) const;

  friend bool operator==(const FreeWord&, const FreeWord&) = default;

 private:
  int rank_ = 0;
  std::vector<int> letters_;
};

FreeWord operator*(const FreeWord& a, const FreeWord& b);
FreeWord inverse(const FreeWord& a);
FreeWord power(const FreeWord& a, int k);
FreeWord free_conjugate(const FreeWord& x, const FreeWord& by);  // by x by^-1
std::vector<long long> abelianize(const FreeWord& w);

// Endomorphism of a free group determined by the images of the generators.
class FreeGroupAutomorphism {
 public:
  FreeGroupAutomorphism() = default;
  explicit FreeGroupAutomorphism(std::vector<FreeWord> images);
  static FreeGroupAutomorphism identity(int rank);

  int rank() const { return static_cast<int>(images_.size()); }
  const std::vector<FreeWord>& images() const { return images_; }
  FreeWord apply(const FreeWord& w) const;
  // (*this) o other
  FreeGroupAutomorphism after(const FreeGroupAutomorphism& other) const;
  // Preimages of the generators found among reduced words up to max_length.
  // Throws PreconditionError if some generator has no preimage that short.
  FreeGroupAutomorphism inverse(int max_length = 8) const;

  friend bool operator==(const FreeGroupAutomorphism&, const FreeGroupAutomorphism&) = default;

 private:
  std::vector<FreeWord> images_;
};

}  // namespace braidlab
