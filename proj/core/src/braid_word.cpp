#include "braidlab/braid_word.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "braidlab/error.hpp"

namespace braidlab {

namespace {

void check_letter(int strands, int letter) {
  const int a = std::abs(letter);
  if (a < 1 || a > strands - 1) {
    throw PreconditionError("letter " + std::to_string(letter) + " out of range for B" +
                            std::to_string(strands));
  }
}

void require_same_strands(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands()) {
    throw StrandMismatch("strand counts differ: B" + std::to_string(a.strands()) + " vs B" +
                         std::to_string(b.strands()));
  }
}

}  // namespace

BraidWord::BraidWord(int strands, std::vector<int> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands < 1) throw PreconditionError("a braid needs at least one strand");
  for (int letter : letters_) check_letter(strands_, letter);
}

BraidWord BraidWord::parse(std::string_view text) {
  std::size_t pos = 0;
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos >= text.size() || text[pos] != 'B') throw ParseError("braid word must start with 'B<n>:'");
  const auto colon = text.find(':', pos);
  if (colon == std::string_view::npos) throw ParseError("missing ':' after strand count");
  const std::string count(text.substr(pos + 1, colon - pos - 1));
  if (count.empty() || !std::all_of(count.begin(), count.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw ParseError("bad strand count '" + count + "'");
  }
  const int strands = std::stoi(count);
  std::vector<int> letters;
  std::istringstream in{std::string(text.substr(colon + 1))};
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw ParseError("bad letter '" + token + "'");
    }
    if (used != token.size() || value == 0) throw ParseError("bad letter '" + token + "'");
    letters.push_back(value);
  }
  try {
    return BraidWord(strands, std::move(letters));
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

std::string BraidWord::to_string() const {
  std::string out = "B" + std::to_string(strands_) + ":";
  for (int letter : letters_) {
    out += ' ';
    out += std::to_string(letter);
  }
  return out;
}

BraidWord& BraidWord::append(const BraidWord& other) {
  require_same_strands(*this, other);
  letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
  return *this;
}

BraidWord& BraidWord::append_letter(int letter) {
  check_letter(strands_, letter);
  letters_.push_back(letter);
  return *this;
}

BraidWord compose(const BraidWord& a, const BraidWord& b) {
  BraidWord r = a;
  r.append(b);
  return r;
}

BraidWord inverse(const BraidWord& a) {
  std::vector<int> letters(a.letters().rbegin(), a.letters().rend());
  for (int& x : letters) x = -x;
  return BraidWord(a.strands(), std::move(letters));
}

BraidWord conjugate(const BraidWord& a, const BraidWord& b) {
  require_same_strands(a, b);
  BraidWord r = inverse(b);
  r.append(a).append(b);
  return r;
}

BraidWord power(const BraidWord& a, int k) {
  const BraidWord base = k < 0 ? inverse(a) : a;
  BraidWord r(a.strands());
  for (int i = 0; i < std::abs(k); ++i) r.append(base);
  return r;
}

BraidWord free_reduce(const BraidWord& a) {
  std::vector<int> out;
  out.reserve(a.length());
  for (int x : a.letters()) {
    if (!out.empty() && out.back() == -x) {
      out.pop_back();
    } else {
      out.push_back(x);
    }
  }
  return BraidWord(a.strands(), std::move(out));
}

int exponent_sum(const BraidWord& w) {
  int e = 0;
  for (int x : w.letters()) e += x > 0 ? 1 : -1;
  return e;
}

Permutation permutation_of(const BraidWord& w) {
  std::vector<int> at(w.strands());
  std::iota(at.begin(), at.end(), 1);
  for (int x : w.letters()) {
    const int k = std::abs(x);
    std::swap(at[k - 1], at[k]);
  }
  return Permutation::from_images(std::move(at));
}

BraidWord project_to_b3(const BraidWord& w) {
  if (w.strands() != 4) throw StrandMismatch("projection to B3 needs a 4-strand braid");
  std::vector<int> letters = w.letters();
  for (int& x : letters) {
    if (x == 3) x = 1;
    if (x == -3) x = -1;
  }
  return BraidWord(3, std::move(letters));
}

BraidWord delete_strands_by_start(const BraidWord& w, std::span<const int> keep) {
  const int n = w.strands();
  std::vector<bool> kept(n + 1, false);
  int count = 0;
  for (int s : keep) {
    if (s < 1 || s > n) throw PreconditionError("strand index out of range");
    if (kept[s]) throw PreconditionError("strand listed twice");
    kept[s] = true;
    ++count;
  }
  if (count == 0) throw PreconditionError("must keep at least one strand");
  // at[p] is the starting position of the strand currently at position p.
  std::vector<int> at(n);
  std::iota(at.begin(), at.end(), 1);
  std::vector<int> letters;
  for (int x : w.letters()) {
    const int k = std::abs(x);
    if (kept[at[k - 1]] && kept[at[k]]) {
      int index = 1;
      for (int p = 0; p < k - 1; ++p) {
        if (kept[at[p]]) ++index;
      }
      letters.push_back(x > 0 ? index : -index);
    }
    std::swap(at[k - 1], at[k]);
  }
  return BraidWord(count, std::move(letters));
}

BraidWord delete_strands(const BraidWord& w, std::span<const int> keep) {
  const Permutation mu = permutation_of(w);
  std::vector<bool> kept(w.strands() + 1, false);
  for (int s : keep) {
    if (s < 1 || s > w.strands()) throw PreconditionError("strand index out of range");
    kept[s] = true;
  }
  for (int s : keep) {
    if (!kept[mu(s)]) {
      throw PreconditionError("kept strands are not invariant under the braid permutation");
    }
  }
  return delete_strands_by_start(w, keep);
}

}  // namespace braidlab
