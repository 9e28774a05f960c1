#include "braidlab/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "braidlab/error.hpp"

namespace braidlab {

Permutation::Permutation(int degree) : images_(degree) {
  if (degree < 0) throw PreconditionError("negative permutation degree");
  std::iota(images_.begin(), images_.end(), 0);
}

Permutation Permutation::from_images(std::vector<int> images_one_based) {
  Permutation p;
  const int n = static_cast<int>(images_one_based.size());
  std::vector<bool> seen(n, false);
  p.images_.resize(n);
  for (int i = 0; i < n; ++i) {
    const int img = images_one_based[i] - 1;
    if (img < 0 || img >= n || seen[img]) {
      throw PreconditionError("permutation images are not a bijection");
    }
    seen[img] = true;
    p.images_[i] = img;
  }
  return p;
}

Permutation Permutation::from_cycles(int degree, std::string_view text) {
  Permutation p(degree);
  std::vector<bool> used(degree, false);
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw ParseError("bad cycle notation '" + std::string(text) + "': " + why);
  };
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    if (text[pos] != '(') fail("expected '('");
    const auto close = text.find(')', pos);
    if (close == std::string_view::npos) fail("unterminated cycle");
    const std::string body(text.substr(pos + 1, close - pos - 1));
    pos = close + 1;
    std::vector<int> cycle;
    if (body.find(',') != std::string::npos || body.find(' ') != std::string::npos) {
      std::string token;
      std::string normalized = body;
      std::replace(normalized.begin(), normalized.end(), ',', ' ');
      std::stringstream ns(normalized);
      while (ns >> token) {
        try {
          cycle.push_back(std::stoi(token));
        } catch (const std::exception&) {
          fail("bad point '" + token + "'");
        }
      }
    } else {
      for (char ch : body) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) fail("bad point");
        cycle.push_back(ch - '0');
      }
    }
    for (int x : cycle) {
      if (x < 1 || x > degree) fail("point out of range");
      if (used[x - 1]) fail("point repeated");
      used[x - 1] = true;
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      p.images_[cycle[k] - 1] = cycle[(k + 1) % cycle.size()] - 1;
    }
  }
  return p;
}

Permutation Permutation::transposition(int degree, int i, int j) {
  Permutation p(degree);
  std::swap(p.images_[i - 1], p.images_[j - 1]);
  return p;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) p.images_[images_[i]] = static_cast<int>(i);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != static_cast<int>(i)) return false;
  }
  return true;
}

bool Permutation::is_even() const {
  int transpositions = 0;
  for (int len : cycle_type()) transpositions += len - 1;
  return transpositions % 2 == 0;
}

int Permutation::order() const {
  int result = 1;
  for (int len : cycle_type()) result = std::lcm(result, len);
  return result;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> lengths;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> result;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == static_cast<int>(i)) continue;
    std::vector<int> cycle;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      cycle.push_back(static_cast<int>(j) + 1);
    }
    result.push_back(std::move(cycle));
  }
  return result;
}

std::string Permutation::to_string() const {
  const auto cs = cycles();
  if (cs.empty()) return "()";
  std::string out;
  for (const auto& cycle : cs) {
    out += '(';
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      if (k) out += ',';
      out += std::to_string(cycle[k]);
    }
    out += ')';
  }
  return out;
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw PreconditionError("permutation degree mismatch");
  Permutation r;
  r.images_.resize(p.images_.size());
  for (std::size_t i = 0; i < p.images_.size(); ++i) r.images_[i] = p.images_[q.images_[i]];
  return r;
}

}  // namespace braidlab
