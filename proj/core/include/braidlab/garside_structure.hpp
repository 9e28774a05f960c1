#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "braidlab/braid_word.hpp"

namespace braidlab {

inline constexpr int kMaxGarsideStrands = 16;

enum class StructureKind : std::uint8_t { Classical, Band };

std::string to_string(StructureKind kind);
StructureKind parse_structure_kind(const std::string& name);

// A simple element, stored by its strand permutation: perm[i] is the final
// position of the strand starting at position i (0-based). For the classical
// structure every permutation occurs; for the band structure the cycles are
// the blocks of a non-crossing partition, each traversed upward.
class Simple {
 public:
  Simple() = default;
  Simple(StructureKind kind, int n);  // identity

  StructureKind kind() const { return kind_; }
  int strands() const { return n_; }
  int at(int i) const { return perm_[i]; }
  void set(int i, int v) { perm_[i] = static_cast<std::uint8_t>(v); }
  bool is_identity() const;

  // Blocks of the underlying partition (cycles including fixed points), 1-based,
  // each sorted, ordered by minimum.
  std::vector<std::vector<int>> blocks() const;

  friend bool operator==(const Simple&, const Simple&) = default;
  friend auto operator<=>(const Simple&, const Simple&) = default;

 private:
  StructureKind kind_ = StructureKind::Classical;
  std::uint8_t n_ = 1;
  std::array<std::uint8_t, kMaxGarsideStrands> perm_{};
};

// Enumeration limits; callers may raise them.
struct EnumerationCaps {
  int classical = 8;
  int band = 10;
};

// The interface shared by the classical (Artin) and band-generator
// (Birman-Ko-Lee) Garside structures on B_n.
class GarsideStructure {
 public:
  virtual ~GarsideStructure() = default;

  virtual StructureKind kind() const = 0;
  std::string name() const { return to_string(kind()); }
  int strands() const { return n_; }

  const std::vector<Simple>& atoms() const { return atoms_; }
  Simple identity() const { return Simple(kind(), n_); }
  const Simple& garside_element() const { return delta_; }

  // Artin-letter word representing a simple element.
  virtual BraidWord word_of(const Simple& s) const = 0;
  // Number of atoms in any decomposition (homogeneous length).
  virtual int length(const Simple& s) const = 0;
  // Whether the permutation in `s` is a simple of this structure.
  virtual bool is_simple(const Simple& s) const = 0;
  // a is a prefix of b.
  virtual bool left_divides(const Simple& a, const Simple& b) const = 0;
  // Prefix-order greatest lower bound.
  virtual Simple meet(const Simple& a, const Simple& b) const = 0;
  // Suffix-order greatest lower bound.
  virtual Simple right_meet(const Simple& a, const Simple& b) const = 0;
  // All simples, duplicate-free; throws CapExceeded past the configured cap.
  virtual std::vector<Simple> enumerate_simples(const EnumerationCaps& caps = {}) const = 0;

  // The simple for the Artin generator sigma_i.
  Simple artin_atom(int i) const;

  // s^-1 delta.
  Simple complement(const Simple& s) const;
  // delta^-1 s delta, and its inverse delta s delta^-1.
  Simple twist(const Simple& s) const;
  Simple untwist(const Simple& s) const;
  Simple twist_power(const Simple& s, int k) const;
  // Order of the twist automorphism on simples.
  int twist_order() const;

  // a b when it is simple (throws PreconditionError otherwise).
  Simple product(const Simple& a, const Simple& b) const;
  bool product_is_simple(const Simple& a, const Simple& b) const;
  // a^-1 b, requires a to be a prefix of b.
  Simple left_quotient(const Simple& a, const Simple& b) const;
  // a b^-1, requires b to be a suffix of a.
  Simple right_quotient(const Simple& a, const Simple& b) const;
  bool right_divides(const Simple& a, const Simple& b) const;  // a is a suffix of b

  void check(const Simple& s) const;

 protected:
  explicit GarsideStructure(int n);
  void init(Simple delta, std::vector<Simple> atoms);

  // Raw permutation products with no simplicity check.
  Simple compose_raw(const Simple& first, const Simple& second) const;
  Simple inverse_raw(const Simple& s) const;

  int n_;
  Simple delta_;
  Simple delta_inv_perm_;  // inverse permutation of delta, not a simple
  std::vector<Simple> atoms_;
  int twist_order_ = 1;
};

class ClassicalStructure final : public GarsideStructure {
 public:
  explicit ClassicalStructure(int n);
  StructureKind kind() const override { return StructureKind::Classical; }
  BraidWord word_of(const Simple& s) const override;
  int length(const Simple& s) const override;
  bool is_simple(const Simple& s) const override;
  bool left_divides(const Simple& a, const Simple& b) const override;
  Simple meet(const Simple& a, const Simple& b) const override;
  Simple right_meet(const Simple& a, const Simple& b) const override;
  std::vector<Simple> enumerate_simples(const EnumerationCaps& caps = {}) const override;
};

class BandStructure final : public GarsideStructure {
 public:
  explicit BandStructure(int n);
  StructureKind kind() const override { return StructureKind::Band; }
  BraidWord word_of(const Simple& s) const override;
  int length(const Simple& s) const override;
  bool is_simple(const Simple& s) const override;
  bool left_divides(const Simple& a, const Simple& b) const override;
  Simple meet(const Simple& a, const Simple& b) const override;
  Simple right_meet(const Simple& a, const Simple& b) const override;
  std::vector<Simple> enumerate_simples(const EnumerationCaps& caps = {}) const override;

  // The atom sigma_{ts}, 1 <= s < t <= n.
  Simple band_atom(int t, int s) const;
  // The simple whose blocks are the given non-crossing partition.
  Simple from_blocks(const std::vector<std::vector<int>>& blocks) const;
};

std::unique_ptr<GarsideStructure> make_structure(StructureKind kind, int n);

}  // namespace braidlab
