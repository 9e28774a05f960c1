#include "braidlab/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "braidlab/error.hpp"

namespace braidlab {

namespace {

class WordParser {
 public:
  WordParser(std::string_view text, const std::vector<std::string>& names)
      : text_(text), names_(names) {}

  FreeWord parse() {
    FreeWord w = product();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return w;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("word '" + std::string(text_) + "': " + why);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  FreeWord product() {
    FreeWord w = factor();
    for (;;) {
      skip_space();
      if (pos_ >= text_.size()) return w;
      const char op = text_[pos_];
      if (op != '*' && op != '/') return w;
      ++pos_;
      const FreeWord rhs = factor();
      w = op == '*' ? w * rhs : w * inverse(rhs);
    }
  }

  FreeWord factor() {
    skip_space();
    FreeWord base;
    if (pos_ < text_.size() && text_[pos_] == '(') {
      ++pos_;
      base = product();
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("missing ')'");
      ++pos_;
    } else if (pos_ < text_.size() && text_[pos_] == '1') {
      ++pos_;
      base = FreeWord(static_cast<int>(names_.size()), {});
    } else {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      if (start == pos_) fail("expected a generator name");
      const std::string name(text_.substr(start, pos_ - start));
      const auto it = std::find(names_.begin(), names_.end(), name);
      if (it == names_.end()) fail("unknown generator '" + name + "'");
      base = FreeWord::generator(static_cast<int>(names_.size()),
                                 static_cast<int>(it - names_.begin()) + 1);
    }
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      skip_space();
      const std::size_t start = pos_;
      if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const std::string digits(text_.substr(start, pos_ - start));
      if (digits.empty() || digits == "-" || digits == "+") fail("bad exponent");
      base = power(base, std::stoi(digits));
    }
    return base;
  }

  std::string_view text_;
  const std::vector<std::string>& names_;
  std::size_t pos_ = 0;
};

std::string strip(std::string_view s) {
  const auto hash = s.find('#');
  if (hash != std::string_view::npos) s = s.substr(0, hash);
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

}  // namespace

FreeWord FinitePresentation::parse_word(std::string_view text) const {
  return WordParser(text, generators).parse();
}

FinitePresentation FinitePresentation::parse(std::string_view text) {
  FinitePresentation p;
  bool have_generators = false;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    std::string line = strip(raw);
    if (line.empty()) continue;
    if (!have_generators) {
      if (line.rfind("generators:", 0) == 0) line = line.substr(11);
      std::replace(line.begin(), line.end(), ',', ' ');
      std::istringstream names(line);
      std::string name;
      while (names >> name) {
        if (!std::all_of(name.begin(), name.end(), [](char c) {
              return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
            }) || std::isdigit(static_cast<unsigned char>(name[0]))) {
          throw ParseError("bad generator name '" + name + "'");
        }
        if (std::find(p.generators.begin(), p.generators.end(), name) != p.generators.end()) {
          throw ParseError("generator '" + name + "' declared twice");
        }
        p.generators.push_back(name);
      }
      if (p.generators.empty()) throw ParseError("no generators declared");
      have_generators = true;
      continue;
    }
    p.relators.push_back(p.parse_word(line));
  }
  if (!have_generators) throw ParseError("presentation has no generator line");
  return p;
}

std::string FinitePresentation::to_text() const {
  std::string out;
  for (std::size_t i = 0; i < generators.size(); ++i) out += (i ? " " : "") + generators[i];
  out += '\n';
  for (const auto& r : relators) out += format(r) + '\n';
  return out;
}

Permutation FiniteImageMap::image_of(const FreeWord& w) const {
  if (static_cast<std::size_t>(w.rank()) != images.size()) {
    throw PreconditionError("word rank differs from the number of generator images");
  }
  if (images.empty()) return Permutation(1);
  Permutation p(images.front().degree());
  for (int x : w.letters()) {
    const Permutation& g = images[static_cast<std::size_t>(std::abs(x) - 1)];
    p = p * (x > 0 ? g : g.inverse());
  }
  return p;
}

void FiniteImageMap::check_relators(const FinitePresentation& p) const {
  if (static_cast<int>(images.size()) != p.rank()) {
    throw PreconditionError("image map has " + std::to_string(images.size()) +
                            " images for " + std::to_string(p.rank()) + " generators");
  }
  for (std::size_t i = 1; i < images.size(); ++i) {
    if (images[i].degree() != images[0].degree()) {
      throw PreconditionError("generator images have different degrees");
    }
  }
  for (const auto& r : p.relators) {
    const Permutation img = image_of(r);
    if (!img.is_identity()) {
      throw PreconditionError("relator " + p.format(r) + " maps to " + img.to_string() +
                              ", not the identity");
    }
  }
}

}  // namespace braidlab
