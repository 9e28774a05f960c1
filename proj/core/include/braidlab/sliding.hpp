#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "braidlab/braid_word.hpp"
#include "braidlab/garside_structure.hpp"
#include "braidlab/normal_form.hpp"

namespace braidlab {

// The meet of iota(X) and iota(X^-1) = complement(final factor).
Simple preferred_prefix(const GarsideStructure& g, const NormalForm& x);
// s(X) = p^-1 X p with p the preferred prefix.
NormalForm cyclic_sliding(const GarsideStructure& g, const NormalForm& x);
BraidWord cyclic_sliding(const GarsideStructure& g, const BraidWord& w);

struct CircuitEntry {
  NormalForm element;
  NormalForm conjugator;  // start^conjugator = element
};

// Iterates sliding from x until an element repeats; returns the first element
// of the circuit reached, with the accumulated conjugator.
CircuitEntry slide_to_circuit(const GarsideStructure& g, const NormalForm& x,
                              std::size_t max_steps = 100000);

struct SlidingCircuitOptions {
  EnumerationCaps simple_caps;
  std::size_t max_elements = 200000;
};

struct SlidingCircuits {
  // Sorted by element.
  std::vector<CircuitEntry> entries;
  const CircuitEntry* find(const NormalForm& x) const;
  std::vector<NormalForm> elements() const;
};

// SC(x) together with a conjugator from x to every member.
SlidingCircuits sliding_circuits(const GarsideStructure& g, const NormalForm& x,
                                 const SlidingCircuitOptions& options = {});
SlidingCircuits sliding_circuits(const GarsideStructure& g, const BraidWord& w,
                                 const SlidingCircuitOptions& options = {});

// Minimum canonical length over SC, which is the summit length.
int summit_length(const GarsideStructure& g, const BraidWord& w,
                  const SlidingCircuitOptions& options = {});

struct ConjugacyCertificate {
  bool conjugate = false;
  std::optional<BraidWord> witness;  // a^witness = b when conjugate
  std::string reason;                // why "no" was returned
};

ConjugacyCertificate conjugacy_solve(const GarsideStructure& g, const BraidWord& a,
                                     const BraidWord& b,
                                     const SlidingCircuitOptions& options = {});

}  // namespace braidlab
