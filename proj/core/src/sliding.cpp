#include "braidlab/sliding.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>
#include <unordered_set>

#include "braidlab/error.hpp"

namespace braidlab {

Simple preferred_prefix(const GarsideStructure& g, const NormalForm& x) {
  if (x.factors.empty()) return g.identity();
  return g.meet(initial_factor(g, x), g.complement(final_factor(g, x)));
}

NormalForm cyclic_sliding(const GarsideStructure& g, const NormalForm& x) {
  const Simple p = preferred_prefix(g, x);
  if (p.is_identity()) return x;
  return nf_conjugate_by_simple(g, x, p);
}

BraidWord cyclic_sliding(const GarsideStructure& g, const BraidWord& w) {
  return to_word(g, cyclic_sliding(g, normal_form(g, w)));
}

CircuitEntry slide_to_circuit(const GarsideStructure& g, const NormalForm& x,
                              std::size_t max_steps) {
  std::unordered_map<NormalForm, std::size_t, NormalFormHash> seen;
  std::vector<CircuitEntry> path;
  path.push_back({x, nf_identity(g)});
  seen.emplace(x, 0);
  for (std::size_t step = 0; step < max_steps; ++step) {
    const CircuitEntry& last = path.back();
    const Simple p = preferred_prefix(g, last.element);
    CircuitEntry next{nf_conjugate_by_simple(g, last.element, p),
                      nf_multiply_simple(g, last.conjugator, p)};
    auto it = seen.find(next.element);
    if (it != seen.end()) return path[it->second];
    seen.emplace(next.element, path.size());
    path.push_back(std::move(next));
  }
  throw CapExceeded("cyclic sliding did not become periodic within the step limit");
}

const CircuitEntry* SlidingCircuits::find(const NormalForm& x) const {
  auto it = std::lower_bound(entries.begin(), entries.end(), x,
                             [](const CircuitEntry& e, const NormalForm& v) { return e.element < v; });
  if (it == entries.end() || it->element != x) return nullptr;
  return &*it;
}

std::vector<NormalForm> SlidingCircuits::elements() const {
  std::vector<NormalForm> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(e.element);
  return out;
}

SlidingCircuits sliding_circuits(const GarsideStructure& g, const NormalForm& x,
                                 const SlidingCircuitOptions& options) {
  std::vector<Simple> simples = g.enumerate_simples(options.simple_caps);
  simples.erase(std::remove_if(simples.begin(), simples.end(),
                               [](const Simple& s) { return s.is_identity(); }),
                simples.end());

  // in_sc: element -> conjugator; rejected: non-periodic elements met so far.
  std::unordered_map<NormalForm, NormalForm, NormalFormHash> in_sc;
  std::unordered_set<NormalForm, NormalFormHash> rejected;
  std::deque<NormalForm> queue;

  auto admit_circuit = [&](const NormalForm& start, const NormalForm& conj) {
    NormalForm y = start;
    NormalForm c = conj;
    do {
      in_sc.emplace(y, c);
      queue.push_back(y);
      if (in_sc.size() > options.max_elements) {
        throw CapExceeded("sliding circuit set exceeds " + std::to_string(options.max_elements) +
                          " elements");
      }
      const Simple p = preferred_prefix(g, y);
      y = nf_conjugate_by_simple(g, y, p);
      c = nf_multiply_simple(g, c, p);
    } while (y != start);
  };

  const CircuitEntry first = slide_to_circuit(g, x);
  admit_circuit(first.element, first.conjugator);

  while (!queue.empty()) {
    const NormalForm y = queue.front();
    queue.pop_front();
    const NormalForm cy = in_sc.at(y);
    for (const auto& s : simples) {
      NormalForm z = nf_conjugate_by_simple(g, y, s);
      if (in_sc.count(z) || rejected.count(z)) continue;
      // z lies on a circuit iff sliding returns to z before meeting anything
      // already classified or repeating.
      std::unordered_set<NormalForm, NormalFormHash> local{z};
      bool periodic = false;
      NormalForm cur = z;
      for (;;) {
        cur = cyclic_sliding(g, cur);
        if (cur == z) {
          periodic = true;
          break;
        }
        if (in_sc.count(cur) || rejected.count(cur) || local.count(cur)) break;
        local.insert(cur);
      }
      if (periodic) {
        admit_circuit(z, nf_multiply_simple(g, cy, s));
      } else {
        rejected.insert(z);
      }
    }
  }

  SlidingCircuits out;
  out.entries.reserve(in_sc.size());
  for (auto& [element, conj] : in_sc) out.entries.push_back({element, conj});
  std::sort(out.entries.begin(), out.entries.end(),
            [](const CircuitEntry& a, const CircuitEntry& b) { return a.element < b.element; });
  return out;
}

SlidingCircuits sliding_circuits(const GarsideStructure& g, const BraidWord& w,
                                 const SlidingCircuitOptions& options) {
  return sliding_circuits(g, normal_form(g, w), options);
}

int summit_length(const GarsideStructure& g, const BraidWord& w,
                  const SlidingCircuitOptions& options) {
  const auto sc = sliding_circuits(g, w, options);
  int best = -1;
  for (const auto& e : sc.entries) {
    if (best < 0 || e.element.canonical_length() < best) best = e.element.canonical_length();
  }
  return best;
}

ConjugacyCertificate conjugacy_solve(const GarsideStructure& g, const BraidWord& a,
                                     const BraidWord& b, const SlidingCircuitOptions& options) {
  if (a.strands() != b.strands()) throw StrandMismatch("conjugacy inputs differ in strand count");
  ConjugacyCertificate cert;
  if (exponent_sum(a) != exponent_sum(b)) {
    cert.reason = "exponent sums differ";
    return cert;
  }
  if (permutation_of(a).cycle_type() != permutation_of(b).cycle_type()) {
    cert.reason = "permutation cycle types differ";
    return cert;
  }
  const NormalForm na = normal_form(g, a);
  const NormalForm nb = normal_form(g, b);
  const CircuitEntry rep_b = slide_to_circuit(g, nb);
  const SlidingCircuits sc = sliding_circuits(g, na, options);
  const CircuitEntry* hit = sc.find(rep_b.element);
  if (hit == nullptr) {
    cert.reason = "sliding circuit sets are disjoint";
    return cert;
  }
  // a^c = y and b^d = y, so a^(c d^-1) = b.
  const NormalForm u = nf_multiply(g, hit->conjugator, nf_inverse(g, rep_b.conjugator));
  if (nf_conjugate(g, na, u) != nb) {
    throw Error("internal error: conjugacy witness failed verification");
  }
  cert.conjugate = true;
  cert.witness = to_word(g, u);
  return cert;
}

}  // namespace braidlab
