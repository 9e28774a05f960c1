#include "braidlab/cabling.hpp"

#include <charconv>
#include <cstdlib>
#include <numeric>

#include "braidlab/error.hpp"
#include "braidlab/garside_structure.hpp"
#include "braidlab/normal_form.hpp"

namespace braidlab {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw PreconditionError("composition needs at least one part");
  for (int p : parts_) {
    if (p < 1) throw PreconditionError("composition parts must be positive");
    total_ += p;
  }
}

Composition Composition::parse(std::string_view text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view item = text.substr(pos, comma - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size() || value < 1) {
      throw ParseError("bad composition '" + std::string(text) + "'");
    }
    parts.push_back(value);
    pos = comma + 1;
  }
  return Composition(std::move(parts));
}

std::string Composition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

int Composition::block_start(int i) const {
  if (i < 1 || i > blocks()) throw PreconditionError("block index out of range");
  return 1 + std::accumulate(parts_.begin(), parts_.begin() + (i - 1), 0);
}

std::vector<int> Composition::label_vector() const {
  std::vector<int> labels;
  for (int b = 0; b < blocks(); ++b) labels.insert(labels.end(), parts_[b], b + 1);
  return labels;
}

std::vector<Composition> compositions_of(int n) {
  std::vector<Composition> out;
  std::vector<int> parts;
  auto recurse = [&](auto&& self, int left) -> void {
    if (left == 0) {
      out.emplace_back(parts);
      return;
    }
    for (int p = 1; p <= left; ++p) {
      parts.push_back(p);
      self(self, left - p);
      parts.pop_back();
    }
  };
  recurse(recurse, n);
  return out;
}

namespace {

// Positive crossing of a block of width a starting at s over the block of
// width b to its right.
void append_block_crossing(std::vector<int>& out, int s, int a, int b) {
  for (int i = a - 1; i >= 0; --i) {
    for (int j = 0; j < b; ++j) out.push_back(s + i + j);
  }
}

}  // namespace

BraidWord cable(const BraidWord& tubular, const std::vector<BraidWord>& interiors,
                const Composition& m) {
  const int k = m.blocks();
  if (tubular.strands() != k) {
    throw StrandMismatch("tubular braid must have one strand per block");
  }
  if (static_cast<int>(interiors.size()) != k) {
    throw StrandMismatch("need one interior braid per block");
  }
  std::vector<int> letters;
  for (int b = 1; b <= k; ++b) {
    if (interiors[b - 1].strands() != m.parts()[b - 1]) {
      throw StrandMismatch("interior braid " + std::to_string(b) + " has the wrong strand count");
    }
    const int offset = m.block_start(b) - 1;
    for (int x : interiors[b - 1].letters()) letters.push_back(x > 0 ? x + offset : x - offset);
  }
  std::vector<int> widths = m.parts();
  for (int x : tubular.letters()) {
    const int j = std::abs(x);
    const int s = 1 + std::accumulate(widths.begin(), widths.begin() + (j - 1), 0);
    const int a = widths[j - 1];
    const int b = widths[j];
    if (x > 0) {
      append_block_crossing(letters, s, a, b);
    } else {
      // Inverse of the positive crossing that brings (b, a) back to (a, b).
      std::vector<int> forward;
      append_block_crossing(forward, s, b, a);
      for (auto it = forward.rbegin(); it != forward.rend(); ++it) letters.push_back(-*it);
    }
    std::swap(widths[j - 1], widths[j]);
  }
  return BraidWord(m.total(), std::move(letters));
}

bool mixed_membership(const BraidWord& w, const Composition& m) {
  if (w.strands() != m.total()) throw StrandMismatch("composition does not match strand count");
  const Permutation mu = permutation_of(w);
  const auto labels = m.label_vector();
  for (int i = 1; i <= m.total(); ++i) {
    if (labels[i - 1] != labels[mu(i) - 1]) return false;
  }
  return true;
}

namespace {

struct Parts {
  BraidWord tubular;
  std::vector<BraidWord> interiors;
};

Parts split(const BraidWord& w, const Composition& m) {
  if (w.strands() != m.total()) throw StrandMismatch("composition does not match strand count");
  Parts parts;
  std::vector<int> firsts;
  for (int b = 1; b <= m.blocks(); ++b) firsts.push_back(m.block_start(b));
  parts.tubular = delete_strands_by_start(w, firsts);
  for (int b = 1; b <= m.blocks(); ++b) {
    std::vector<int> block(m.parts()[b - 1]);
    std::iota(block.begin(), block.end(), m.block_start(b));
    parts.interiors.push_back(delete_strands_by_start(w, block));
  }
  const ClassicalStructure g(m.total());
  if (!words_equal(g, cable(parts.tubular, parts.interiors, m), w)) {
    throw NotTubePreserving("braid is not a cabling over the blocks " + m.to_string());
  }
  return parts;
}

}  // namespace

BraidWord extract_tubular(const BraidWord& w, const Composition& m) {
  return split(w, m).tubular;
}

BraidWord extract_interior(const BraidWord& w, const Composition& m, int i) {
  if (i < 1 || i > m.blocks()) throw PreconditionError("block index out of range");
  return split(w, m).interiors[static_cast<std::size_t>(i - 1)];
}

}  // namespace braidlab
