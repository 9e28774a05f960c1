#include "braidlab/normal_form.hpp"

#include <algorithm>

#include "braidlab/error.hpp"

namespace braidlab {

std::size_t NormalFormHash::operator()(const NormalForm& nf) const {
  std::size_t h = static_cast<std::size_t>(nf.inf) * 0x9e3779b97f4a7c15ULL;
  h ^= static_cast<std::size_t>(nf.side) + (static_cast<std::size_t>(nf.kind) << 1);
  for (const auto& s : nf.factors) {
    for (int i = 0; i < s.strands(); ++i) {
      h = (h ^ static_cast<std::size_t>(s.at(i) + 1)) * 0x100000001b3ULL;
    }
    h = (h ^ 0xffu) * 0x100000001b3ULL;
  }
  return h;
}

namespace {

void check_strands(const GarsideStructure& g, int n) {
  if (g.strands() != n) {
    throw StrandMismatch("word on " + std::to_string(n) + " strands given to a structure on " +
                         std::to_string(g.strands()));
  }
}

NormalForm empty_form(const GarsideStructure& g, int inf) {
  NormalForm nf;
  nf.kind = g.kind();
  nf.side = Side::Left;
  nf.strands = g.strands();
  nf.inf = inf;
  return nf;
}

// Restores left-weightedness of the whole sequence and moves leading deltas
// and trailing identities out.
void settle(const GarsideStructure& g, NormalForm& nf) {
  auto& f = nf.factors;
  for (;;) {
    bool changed = false;
    for (std::size_t i = f.size(); i-- > 1;) {
      const Simple t = g.meet(g.complement(f[i - 1]), f[i]);
      if (t.is_identity()) continue;
      f[i - 1] = g.product(f[i - 1], t);
      f[i] = g.left_quotient(t, f[i]);
      changed = true;
    }
    const auto before = f.size();
    f.erase(std::remove_if(f.begin(), f.end(), [](const Simple& s) { return s.is_identity(); }),
            f.end());
    if (!changed && f.size() == before) break;
  }
  const Simple& delta = g.garside_element();
  std::size_t lead = 0;
  while (lead < f.size() && f[lead] == delta) ++lead;
  nf.inf += static_cast<int>(lead);
  f.erase(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(lead));
}

// Appends a simple to a left-weighted form. One right-to-left sweep suffices
// unless a factor is emptied, in which case settle() finishes the job.
void push_simple(const GarsideStructure& g, NormalForm& nf, const Simple& s) {
  if (s.is_identity()) return;
  auto& f = nf.factors;
  f.push_back(s);
  bool emptied = false;
  for (std::size_t i = f.size(); i-- > 1;) {
    const Simple t = g.meet(g.complement(f[i - 1]), f[i]);
    if (t.is_identity()) break;
    f[i - 1] = g.product(f[i - 1], t);
    f[i] = g.left_quotient(t, f[i]);
    if (f[i].is_identity()) emptied = true;
  }
  if (emptied || f.front() == g.garside_element()) settle(g, nf);
}

NormalForm inverse_of_simple(const GarsideStructure& g, const Simple& s) {
  // s^-1 = delta^-1 untwist(complement(s)).
  NormalForm nf = empty_form(g, s.is_identity() ? 0 : -1);
  if (!s.is_identity()) push_simple(g, nf, g.untwist(g.complement(s)));
  return nf;
}

}  // namespace

NormalForm nf_identity(const GarsideStructure& g) { return empty_form(g, 0); }

NormalForm nf_delta_power(const GarsideStructure& g, int k) { return empty_form(g, k); }

NormalForm nf_of_simple(const GarsideStructure& g, const Simple& s) {
  g.check(s);
  NormalForm nf = empty_form(g, 0);
  push_simple(g, nf, s);
  return nf;
}

NormalForm normal_form(const GarsideStructure& g, const BraidWord& w, Side side) {
  check_strands(g, w.strands());
  const auto& letters = w.letters();
  int negatives = 0;
  for (int l : letters) negatives += l < 0 ? 1 : 0;

  // Every sigma_i^-1 is delta^-1 times a simple; all delta^-1 are moved to the
  // front, twisting the simples they pass.
  NormalForm nf = empty_form(g, -negatives);
  int after = negatives;
  for (int l : letters) {
    if (l > 0) {
      push_simple(g, nf, g.twist_power(g.artin_atom(l), -after));
    } else {
      --after;
      push_simple(g, nf, g.twist_power(g.complement(g.artin_atom(-l)), -after - 1));
    }
  }
  settle(g, nf);
  return side == Side::Left ? nf : to_right_form(g, nf);
}

bool words_equal(const GarsideStructure& g, const BraidWord& a, const BraidWord& b) {
  check_strands(g, a.strands());
  check_strands(g, b.strands());
  return normal_form(g, a) == normal_form(g, b);
}

BraidWord to_word(const GarsideStructure& g, const NormalForm& nf) {
  const BraidWord delta_power = power(g.word_of(g.garside_element()), nf.inf);
  BraidWord body(g.strands());
  for (const auto& s : nf.factors) body.append(g.word_of(s));
  return nf.side == Side::Left ? compose(delta_power, body) : compose(body, delta_power);
}

NormalForm nf_multiply(const GarsideStructure& g, const NormalForm& a, const NormalForm& b) {
  // delta^p A delta^q B = delta^(p+q) tau^q(A) B.
  NormalForm nf = empty_form(g, a.inf + b.inf);
  for (const auto& s : a.factors) nf.factors.push_back(g.twist_power(s, b.inf));
  for (const auto& s : b.factors) push_simple(g, nf, s);
  return nf;
}

NormalForm nf_inverse(const GarsideStructure& g, const NormalForm& a) {
  const int r = a.canonical_length();
  NormalForm nf = empty_form(g, -r - a.inf);
  for (int j = 1; j <= r; ++j) {
    const Simple& s = a.factors[static_cast<std::size_t>(r - j)];
    nf.factors.push_back(g.twist_power(g.complement(s), -(r - j) - a.inf - 1));
  }
  settle(g, nf);
  return nf;
}

NormalForm nf_conjugate(const GarsideStructure& g, const NormalForm& a, const NormalForm& b) {
  return nf_multiply(g, nf_multiply(g, nf_inverse(g, b), a), b);
}

NormalForm nf_multiply_simple(const GarsideStructure& g, const NormalForm& a, const Simple& s) {
  NormalForm nf = a;
  push_simple(g, nf, s);
  return nf;
}

NormalForm nf_left_multiply_simple(const GarsideStructure& g, const Simple& s,
                                   const NormalForm& a) {
  // s delta^p A = delta^p tau^p(s) A.
  NormalForm nf = empty_form(g, a.inf);
  push_simple(g, nf, g.twist_power(s, a.inf));
  for (const auto& f : a.factors) push_simple(g, nf, f);
  return nf;
}

NormalForm nf_left_multiply_simple_inverse(const GarsideStructure& g, const Simple& s,
                                           const NormalForm& a) {
  if (s.is_identity()) return a;
  // s^-1 delta^p A = delta^(p-1) tau^(p-1)(complement(s)) A.
  NormalForm nf = empty_form(g, a.inf - 1);
  push_simple(g, nf, g.twist_power(g.complement(s), a.inf - 1));
  for (const auto& f : a.factors) push_simple(g, nf, f);
  return nf;
}

NormalForm nf_multiply_simple_inverse(const GarsideStructure& g, const NormalForm& a,
                                      const Simple& s) {
  return nf_multiply(g, a, inverse_of_simple(g, s));
}

NormalForm nf_conjugate_by_simple(const GarsideStructure& g, const NormalForm& a,
                                  const Simple& s) {
  return nf_multiply_simple(g, nf_left_multiply_simple_inverse(g, s, a), s);
}

NormalForm to_right_form(const GarsideStructure& g, const NormalForm& left) {
  if (left.side != Side::Left) throw PreconditionError("expected a left normal form");
  // delta^p A_1 ... A_r = tau^-p(A_1) ... tau^-p(A_r) delta^p, then shift
  // material rightward until every factor is maximal on its left side.
  NormalForm nf = empty_form(g, left.inf);
  nf.side = Side::Right;
  auto& f = nf.factors;
  for (const auto& s : left.factors) f.push_back(g.twist_power(s, -left.inf));
  const Simple& delta = g.garside_element();
  for (;;) {
    bool changed = false;
    for (std::size_t i = 0; i + 1 < f.size(); ++i) {
      const Simple t = g.right_meet(f[i], g.right_quotient(delta, f[i + 1]));
      if (t.is_identity()) continue;
      f[i] = g.right_quotient(f[i], t);
      f[i + 1] = g.product(t, f[i + 1]);
      changed = true;
    }
    const auto before = f.size();
    f.erase(std::remove_if(f.begin(), f.end(), [](const Simple& s) { return s.is_identity(); }),
            f.end());
    if (!changed && f.size() == before) break;
  }
  while (!f.empty() && f.back() == delta) {
    f.pop_back();
    ++nf.inf;
  }
  return nf;
}

bool is_left_weighted(const GarsideStructure& g, const Simple& a, const Simple& b) {
  return g.meet(g.complement(a), b).is_identity();
}

bool is_right_weighted(const GarsideStructure& g, const Simple& a, const Simple& b) {
  const Simple left_complement = g.right_quotient(g.garside_element(), b);
  return g.right_meet(a, left_complement).is_identity();
}

Simple initial_factor(const GarsideStructure& g, const NormalForm& x) {
  if (x.factors.empty()) return g.identity();
  return g.twist_power(x.factors.front(), -x.inf);
}

Simple final_factor(const GarsideStructure& g, const NormalForm& x) {
  if (x.factors.empty()) return g.identity();
  return x.factors.back();
}

}  // namespace braidlab
