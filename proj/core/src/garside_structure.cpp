#include "braidlab/garside_structure.hpp"

#include <algorithm>
#include <numeric>

#include "braidlab/error.hpp"
#include "braidlab/named_elements.hpp"

namespace braidlab {

std::string to_string(StructureKind kind) {
  return kind == StructureKind::Classical ? "classical" : "band";
}

StructureKind parse_structure_kind(const std::string& name) {
  if (name == "classical") return StructureKind::Classical;
  if (name == "band") return StructureKind::Band;
  throw ParseError("unknown Garside structure '" + name + "'");
}

Simple::Simple(StructureKind kind, int n) : kind_(kind), n_(static_cast<std::uint8_t>(n)) {
  if (n < 1 || n > kMaxGarsideStrands) {
    throw PreconditionError("Garside structures support 1.." + std::to_string(kMaxGarsideStrands) +
                            " strands");
  }
  for (int i = 0; i < n; ++i) perm_[i] = static_cast<std::uint8_t>(i);
}

bool Simple::is_identity() const {
  for (int i = 0; i < n_; ++i) {
    if (perm_[i] != i) return false;
  }
  return true;
}

std::vector<std::vector<int>> Simple::blocks() const {
  std::vector<std::vector<int>> result;
  std::vector<bool> seen(n_, false);
  for (int i = 0; i < n_; ++i) {
    if (seen[i]) continue;
    std::vector<int> block;
    for (int j = i; !seen[j]; j = perm_[j]) {
      seen[j] = true;
      block.push_back(j + 1);
    }
    std::sort(block.begin(), block.end());
    result.push_back(std::move(block));
  }
  return result;
}

GarsideStructure::GarsideStructure(int n) : n_(n) {
  if (n < 1 || n > kMaxGarsideStrands) {
    throw PreconditionError("Garside structures support 1.." + std::to_string(kMaxGarsideStrands) +
                            " strands");
  }
}

void GarsideStructure::init(Simple delta, std::vector<Simple> atoms) {
  delta_ = delta;
  delta_inv_perm_ = inverse_raw(delta);
  atoms_ = std::move(atoms);
  std::vector<Simple> images = atoms_;
  twist_order_ = 1;
  for (;;) {
    for (auto& a : images) a = twist(a);
    if (images == atoms_) break;
    ++twist_order_;
  }
}

Simple GarsideStructure::compose_raw(const Simple& first, const Simple& second) const {
  Simple r(kind(), n_);
  for (int i = 0; i < n_; ++i) r.set(i, second.at(first.at(i)));
  return r;
}

Simple GarsideStructure::inverse_raw(const Simple& s) const {
  Simple r(kind(), n_);
  for (int i = 0; i < n_; ++i) r.set(s.at(i), i);
  return r;
}

void GarsideStructure::check(const Simple& s) const {
  if (s.kind() != kind() || s.strands() != n_) {
    throw PreconditionError("simple belongs to a different Garside structure");
  }
}

Simple GarsideStructure::artin_atom(int i) const {
  if (i < 1 || i > n_ - 1) throw PreconditionError("Artin generator index out of range");
  Simple s(kind(), n_);
  s.set(i - 1, i);
  s.set(i, i - 1);
  return s;
}

Simple GarsideStructure::complement(const Simple& s) const {
  check(s);
  return compose_raw(inverse_raw(s), delta_);
}

Simple GarsideStructure::twist(const Simple& s) const {
  check(s);
  return compose_raw(compose_raw(delta_inv_perm_, s), delta_);
}

Simple GarsideStructure::untwist(const Simple& s) const {
  check(s);
  return compose_raw(compose_raw(delta_, s), delta_inv_perm_);
}

Simple GarsideStructure::twist_power(const Simple& s, int k) const {
  Simple r = s;
  const int order = twist_order_ > 0 ? twist_order_ : 1;
  int m = ((k % order) + order) % order;
  for (int i = 0; i < m; ++i) r = twist(r);
  return r;
}

int GarsideStructure::twist_order() const { return twist_order_; }

bool GarsideStructure::product_is_simple(const Simple& a, const Simple& b) const {
  check(a);
  check(b);
  const Simple p = compose_raw(a, b);
  return is_simple(p) && length(p) == length(a) + length(b);
}

Simple GarsideStructure::product(const Simple& a, const Simple& b) const {
  if (!product_is_simple(a, b)) throw PreconditionError("product of simples is not simple");
  return compose_raw(a, b);
}

Simple GarsideStructure::left_quotient(const Simple& a, const Simple& b) const {
  check(a);
  check(b);
  if (!left_divides(a, b)) throw PreconditionError("left quotient of non-divisor");
  return compose_raw(inverse_raw(a), b);
}

Simple GarsideStructure::right_quotient(const Simple& a, const Simple& b) const {
  check(a);
  check(b);
  if (!right_divides(b, a)) throw PreconditionError("right quotient of non-divisor");
  return compose_raw(a, inverse_raw(b));
}

bool GarsideStructure::right_divides(const Simple& a, const Simple& b) const {
  check(a);
  check(b);
  const Simple q = compose_raw(b, inverse_raw(a));
  return is_simple(q) && length(q) + length(a) == length(b);
}

// ---------------------------------------------------------------------------
// Classical structure: simples are permutation braids.

ClassicalStructure::ClassicalStructure(int n) : GarsideStructure(n) {
  Simple delta(StructureKind::Classical, n);
  for (int i = 0; i < n; ++i) delta.set(i, n - 1 - i);
  std::vector<Simple> atoms;
  for (int i = 1; i <= n - 1; ++i) atoms.push_back(artin_atom(i));
  init(delta, std::move(atoms));
}

int ClassicalStructure::length(const Simple& s) const {
  int inversions = 0;
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      if (s.at(i) > s.at(j)) ++inversions;
    }
  }
  return inversions;
}

bool ClassicalStructure::is_simple(const Simple& s) const {
  return s.kind() == StructureKind::Classical && s.strands() == n_;
}

BraidWord ClassicalStructure::word_of(const Simple& s) const {
  check(s);
  Simple p = s;
  std::vector<int> letters;
  for (;;) {
    int i = 0;
    while (i + 1 < n_ && p.at(i) < p.at(i + 1)) ++i;
    if (i + 1 >= n_) break;
    letters.push_back(i + 1);
    const int tmp = p.at(i);
    p.set(i, p.at(i + 1));
    p.set(i + 1, tmp);
  }
  return BraidWord(n_, std::move(letters));
}

bool ClassicalStructure::left_divides(const Simple& a, const Simple& b) const {
  check(a);
  check(b);
  // Every pair of strands crossing in a must also cross in b.
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      if (a.at(i) > a.at(j) && b.at(i) < b.at(j)) return false;
    }
  }
  return true;
}

Simple ClassicalStructure::meet(const Simple& a, const Simple& b) const {
  check(a);
  check(b);
  Simple x = a;
  Simple y = b;
  Simple result(StructureKind::Classical, n_);
  for (;;) {
    int i = 0;
    while (i + 1 < n_ && !(x.at(i) > x.at(i + 1) && y.at(i) > y.at(i + 1))) ++i;
    if (i + 1 >= n_) break;
    for (Simple* z : {&x, &y}) {
      const int tmp = z->at(i);
      z->set(i, z->at(i + 1));
      z->set(i + 1, tmp);
    }
    result = compose_raw(result, artin_atom(i + 1));
  }
  return result;
}

Simple ClassicalStructure::right_meet(const Simple& a, const Simple& b) const {
  // Reversing a permutation braid inverts its permutation and swaps prefixes
  // with suffixes.
  return inverse_raw(meet(inverse_raw(a), inverse_raw(b)));
}

std::vector<Simple> ClassicalStructure::enumerate_simples(const EnumerationCaps& caps) const {
  if (n_ > caps.classical) {
    throw CapExceeded("classical simple enumeration capped at n = " + std::to_string(caps.classical));
  }
  std::vector<int> p(n_);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Simple> result;
  do {
    Simple s(StructureKind::Classical, n_);
    for (int i = 0; i < n_; ++i) s.set(i, p[i]);
    result.push_back(s);
  } while (std::next_permutation(p.begin(), p.end()));
  return result;
}

// ---------------------------------------------------------------------------
// Band structure: simples are non-crossing partitions.

namespace {

// label[i] = smallest element of the block containing i.
std::vector<int> block_labels(const Simple& s) {
  const int n = s.strands();
  std::vector<int> label(n, -1);
  for (int i = 0; i < n; ++i) {
    if (label[i] >= 0) continue;
    int m = i;
    for (int j = s.at(i); j != i; j = s.at(j)) m = std::min(m, j);
    label[i] = m;
    for (int j = s.at(i); j != i; j = s.at(j)) label[j] = m;
  }
  return label;
}

}  // namespace

BandStructure::BandStructure(int n) : GarsideStructure(n) {
  Simple delta(StructureKind::Band, n);
  for (int i = 0; i < n; ++i) delta.set(i, (i + 1) % n);
  std::vector<Simple> atoms;
  for (int t = 2; t <= n; ++t) {
    for (int s = 1; s < t; ++s) atoms.push_back(band_atom(t, s));
  }
  init(delta, std::move(atoms));
}

Simple BandStructure::band_atom(int t, int s) const {
  if (s > t) std::swap(s, t);
  if (s < 1 || t > n_ || s == t) throw PreconditionError("band atom indices out of range");
  Simple a(StructureKind::Band, n_);
  a.set(s - 1, t - 1);
  a.set(t - 1, s - 1);
  return a;
}

Simple BandStructure::from_blocks(const std::vector<std::vector<int>>& blocks) const {
  Simple s(StructureKind::Band, n_);
  std::vector<bool> seen(n_, false);
  for (auto block : blocks) {
    std::sort(block.begin(), block.end());
    for (std::size_t k = 0; k < block.size(); ++k) {
      const int x = block[k] - 1;
      if (x < 0 || x >= n_ || seen[x]) throw PreconditionError("blocks do not form a partition");
      seen[x] = true;
      s.set(x, block[(k + 1) % block.size()] - 1);
    }
  }
  if (!is_simple(s)) throw PreconditionError("partition is crossing");
  return s;
}

int BandStructure::length(const Simple& s) const {
  int cycles = 0;
  std::vector<bool> seen(n_, false);
  for (int i = 0; i < n_; ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (int j = i; !seen[j]; j = s.at(j)) seen[j] = true;
  }
  return n_ - cycles;
}

bool BandStructure::is_simple(const Simple& s) const {
  if (s.kind() != StructureKind::Band || s.strands() != n_) return false;
  const auto label = block_labels(s);
  // Each cycle must run upward from its minimum and wrap once.
  for (int i = 0; i < n_; ++i) {
    const int j = s.at(i);
    if (j > i) continue;
    if (j != label[i]) return false;  // a descent must return to the minimum
  }
  // Non-crossing: no a < b < c < d with a~c, b~d in different blocks.
  for (int a = 0; a < n_; ++a) {
    for (int b = a + 1; b < n_; ++b) {
      if (label[b] == label[a]) continue;
      for (int c = b + 1; c < n_; ++c) {
        if (label[c] != label[a]) continue;
        for (int d = c + 1; d < n_; ++d) {
          if (label[d] == label[b]) return false;
        }
      }
    }
  }
  return true;
}

bool BandStructure::left_divides(const Simple& a, const Simple& b) const {
  check(a);
  check(b);
  const auto la = block_labels(a);
  const auto lb = block_labels(b);
  // Refinement: elements sharing a block of a share a block of b.
  for (int i = 0; i < n_; ++i) {
    if (lb[i] != lb[la[i]]) return false;
  }
  return true;
}

Simple BandStructure::meet(const Simple& a, const Simple& b) const {
  check(a);
  check(b);
  const auto la = block_labels(a);
  const auto lb = block_labels(b);
  Simple r(StructureKind::Band, n_);
  // Intersect blocks; walking upward keeps each cycle increasing.
  for (int i = 0; i < n_; ++i) {
    int next = -1;
    for (int j = i + 1; j < n_; ++j) {
      if (la[j] == la[i] && lb[j] == lb[i]) {
        next = j;
        break;
      }
    }
    if (next < 0) {
      for (int j = 0; j <= i; ++j) {
        if (la[j] == la[i] && lb[j] == lb[i]) {
          next = j;
          break;
        }
      }
    }
    r.set(i, next);
  }
  return r;
}

Simple BandStructure::right_meet(const Simple& a, const Simple& b) const {
  // Prefix and suffix orders coincide on non-crossing partitions.
  return meet(a, b);
}

BraidWord BandStructure::word_of(const Simple& s) const {
  check(s);
  BraidWord w(n_);
  for (const auto& block : s.blocks()) {
    for (std::size_t k = block.size(); k-- > 1;) {
      w.append(band_generator(n_, block[k - 1], block[k]));
    }
  }
  return w;
}

std::vector<Simple> BandStructure::enumerate_simples(const EnumerationCaps& caps) const {
  if (n_ > caps.band) {
    throw CapExceeded("band simple enumeration capped at n = " + std::to_string(caps.band));
  }
  std::vector<Simple> result;
  std::vector<std::vector<int>> blocks;
  // Assign 1..n in order. Joining block b with x crosses another block c
  // exactly when c has elements on both sides of b's current maximum.
  auto recurse = [&](auto&& self, int x) -> void {
    if (x > n_) {
      Simple s(StructureKind::Band, n_);
      for (const auto& block : blocks) {
        for (std::size_t k = 0; k < block.size(); ++k) {
          s.set(block[k] - 1, block[(k + 1) % block.size()] - 1);
        }
      }
      result.push_back(s);
      return;
    }
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      const int last = blocks[b].back();
      bool crossing = false;
      for (std::size_t c = 0; c < blocks.size() && !crossing; ++c) {
        if (c != b) crossing = blocks[c].front() < last && blocks[c].back() > last;
      }
      if (crossing) continue;
      blocks[b].push_back(x);
      self(self, x + 1);
      blocks[b].pop_back();
    }
    blocks.push_back({x});
    self(self, x + 1);
    blocks.pop_back();
  };
  recurse(recurse, 1);
  std::sort(result.begin(), result.end());
  return result;
}

std::unique_ptr<GarsideStructure> make_structure(StructureKind kind, int n) {
  if (kind == StructureKind::Classical) return std::make_unique<ClassicalStructure>(n);
  return std::make_unique<BandStructure>(n);
}

}  // namespace braidlab
