#include "braidlab/four_strand.hpp"

#include <cstdlib>
#include <map>
#include <mutex>

#include "braidlab/error.hpp"
#include "braidlab/garside_structure.hpp"
#include "braidlab/named_elements.hpp"
#include "braidlab/normal_form.hpp"

namespace braidlab {

namespace {

FreeWord fw(std::vector<int> letters) { return FreeWord(2, std::move(letters)); }

bool braid_trivial(const BraidWord& w) {
  const auto g = make_structure(StructureKind::Classical, w.strands());
  return normal_form(*g, w).is_identity();
}

IntegerMatrix columns_of(const FreeWord& a, const FreeWord& b) {
  const auto x = abelianize(a);
  const auto y = abelianize(b);
  return IntegerMatrix({{x[0], y[0]}, {x[1], y[1]}});
}

// Powers of an automorphism and of its inverse, cached per exponent.
class PowerCache {
 public:
  explicit PowerCache(FreeGroupAutomorphism base)
      : base_(std::move(base)), inverse_(base_.inverse()) {}

  const FreeGroupAutomorphism& get(int k) {
    std::lock_guard lock(mutex_);
    auto it = cache_.find(k);
    if (it != cache_.end()) return it->second;
    FreeGroupAutomorphism r = FreeGroupAutomorphism::identity(base_.rank());
    for (int i = 0; i < std::abs(k); ++i) r = r.after(k > 0 ? base_ : inverse_);
    return cache_.emplace(k, std::move(r)).first->second;
  }

 private:
  FreeGroupAutomorphism base_;
  FreeGroupAutomorphism inverse_;
  std::map<int, FreeGroupAutomorphism> cache_;
  std::mutex mutex_;
};

}  // namespace

BraidWord substitute_braids(const FreeWord& x, const std::vector<BraidWord>& gens) {
  if (gens.empty() || static_cast<int>(gens.size()) != x.rank()) {
    throw PreconditionError("need one braid per free generator");
  }
  BraidWord out(gens.front().strands());
  for (int l : x.letters()) {
    const BraidWord& g = gens[static_cast<std::size_t>(std::abs(l) - 1)];
    out.append(l > 0 ? g : inverse(g));
  }
  return out;
}

const std::vector<std::string>& k4_names() {
  static const std::vector<std::string> names{"c", "w"};
  return names;
}

const std::vector<std::string>& b3prime_names() {
  static const std::vector<std::string> names{"u", "t"};
  return names;
}

BraidWord k4_substitute(const FreeWord& x) {
  if (x.rank() != 2) throw PreconditionError("K4 words have rank 2");
  return substitute_braids(x, {elem_c(), elem_w()});
}

BraidWord b3prime_substitute(const FreeWord& x, int n) {
  if (x.rank() != 2) throw PreconditionError("B'3 words have rank 2");
  return substitute_braids(x, {elem_u(n), elem_t(n)});
}

const K4Actions& k4_actions() {
  static const K4Actions actions = [] {
    K4Actions a;
    // u c u^-1 = w, u w u^-1 = w^2 c^-1 w, t c t^-1 = c w, t w t^-1 = c w^2.
    a.by_u = FreeGroupAutomorphism({fw({2}), fw({2, 2, -1, 2})});
    a.by_t = FreeGroupAutomorphism({fw({1, 2}), fw({1, 2, 2})});
    // sigma_1 c sigma_1^-1 = c, sigma_1 w sigma_1^-1 = c^-1 w.
    a.by_sigma1 = FreeGroupAutomorphism({fw({1}), fw({-1, 2})});
    a.by_sigma2 = a.by_u.after(a.by_sigma1);
    return a;
  }();
  return actions;
}

FreeWord k4_rewrite(const BraidWord& x) {
  if (x.strands() != 4) throw StrandMismatch("k4_rewrite needs a 4-strand braid");
  if (!braid_trivial(project_to_b3(x))) {
    throw PreconditionError("braid " + x.to_string() + " has nontrivial image in B3");
  }
  static const FreeGroupAutomorphism s1 = k4_actions().by_sigma1;
  static const FreeGroupAutomorphism s2 = k4_actions().by_sigma2;
  static const FreeGroupAutomorphism s1_inv = s1.inverse();
  static const FreeGroupAutomorphism s2_inv = s2.inverse();

  // Shadow h in <sigma_1, sigma_2>; sigma_3 = c sigma_1 and the c's are
  // pushed left as h c h^-1.
  FreeGroupAutomorphism shadow = FreeGroupAutomorphism::identity(2);
  const FreeWord c = fw({1});
  FreeWord out = fw({});
  for (int l : x.letters()) {
    switch (l) {
      case 1: shadow = shadow.after(s1); break;
      case -1: shadow = shadow.after(s1_inv); break;
      case 2: shadow = shadow.after(s2); break;
      case -2: shadow = shadow.after(s2_inv); break;
      case 3:
        out = out * shadow.apply(c);
        shadow = shadow.after(s1);
        break;
      case -3:
        shadow = shadow.after(s1_inv);
        out = out * shadow.apply(inverse(c));
        break;
      default: throw Error("unreachable letter");
    }
  }
  const auto g = make_structure(StructureKind::Classical, 4);
  if (!words_equal(*g, k4_substitute(out), x)) {
    throw Error("K4 rewriting of " + x.to_string() + " failed verification");
  }
  return out;
}

const FreeGroupAutomorphism& b3prime_sigma1_tilde() {
  // sigma_1 u sigma_1^-1 = t^-1 u, sigma_1 t sigma_1^-1 = u.
  static const FreeGroupAutomorphism s({fw({-2, 1}), fw({1})});
  return s;
}

FreeWord b3prime_rewrite(const BraidWord& x) {
  if (x.strands() != 3) throw StrandMismatch("b3prime_rewrite needs a 3-strand braid");
  if (exponent_sum(x) != 0) throw PreconditionError("braid " + x.to_string() + " is not in B'3");
  static PowerCache powers(b3prime_sigma1_tilde());
  // With transversal sigma_1^k, the Schreier generator at level k for sigma_2
  // is sigma_1^k u sigma_1^-k.
  const FreeWord u = fw({1});
  FreeWord out = fw({});
  int level = 0;
  for (int l : x.letters()) {
    if (l == 1) {
      ++level;
    } else if (l == -1) {
      --level;
    } else if (l == 2) {
      out = out * powers.get(level).apply(u);
      ++level;
    } else {
      --level;
      out = out * inverse(powers.get(level).apply(u));
    }
  }
  const auto g = make_structure(StructureKind::Classical, 3);
  if (!words_equal(*g, b3prime_substitute(out), x)) {
    throw Error("B'3 rewriting of " + x.to_string() + " failed verification");
  }
  return out;
}

IntegerMatrix k4_action_matrix(const BraidWord& x) {
  if (x.strands() != 4) throw StrandMismatch("K4 action needs a 4-strand braid");
  if (exponent_sum(x) != 0) throw PreconditionError("braid " + x.to_string() + " is not in B'4");
  const FreeWord img_c = k4_rewrite(compose(compose(x, elem_c()), inverse(x)));
  const FreeWord img_w = k4_rewrite(compose(compose(x, elem_w()), inverse(x)));
  return columns_of(img_c, img_w);
}

IntegerMatrix b3prime_action_matrix(const FreeGroupAutomorphism& phi) {
  if (phi.rank() != 2) throw PreconditionError("B'3 automorphisms have rank 2");
  return columns_of(phi.images()[0], phi.images()[1]);
}

IntegerMatrix b3prime_action_matrix(const AutomorphismSpec& phi) {
  const FreeWord img_u = b3prime_rewrite(apply_automorphism(phi, elem_u(3)));
  const FreeWord img_t = b3prime_rewrite(apply_automorphism(phi, elem_t(3)));
  return b3prime_action_matrix(FreeGroupAutomorphism({img_u, img_t}));
}

FinitePresentation b4prime_presentation() {
  return FinitePresentation::parse(
      "u v w c\n"
      "u*c/u/w\n"
      "u*w/u/w*c/w/w\n"
      "v*c/v/w*c\n"
      "v*w/v/w*c*c/w*c/w*c/w*c\n");
}

std::vector<BraidWord> b4prime_generator_braids() {
  return {elem_u(4), elem_v(4), elem_w(), elem_c()};
}

FiniteImageMap b4prime_image_map() {
  FiniteImageMap f;
  for (const auto& b : b4prime_generator_braids()) f.images.push_back(permutation_of(b));
  return f;
}

FinitePresentation b3prime_presentation() { return FinitePresentation::parse("u t\n"); }

FiniteImageMap b3prime_image_map() {
  return FiniteImageMap{{permutation_of(elem_u(3)), permutation_of(elem_t(3))}};
}

std::vector<FreeWord> basis_e3() {
  const FinitePresentation p = b3prime_presentation();
  return {p.parse_word("u*t"), p.parse_word("t*u"), p.parse_word("u^3"), p.parse_word("t^3")};
}

std::vector<FreeWord> basis_e4() {
  const FinitePresentation p = b4prime_presentation();
  return {p.parse_word("u*(u/v)"),  p.parse_word("(u/v)*u"), p.parse_word("u^3"),
          p.parse_word("(u/v)^3"),  p.parse_word("c^2"),     p.parse_word("w^2"),
          p.parse_word("(c*w)^2")};
}

}  // namespace braidlab
