#include "braidlab/s6_automorphism.hpp"

#include <deque>
#include <map>
#include <mutex>
#include <set>

#include "braidlab/error.hpp"

namespace braidlab {

namespace {

const std::map<Permutation, Permutation>& nu_table() {
  static const std::map<Permutation, Permutation> table = [] {
    const Permutation gens[2] = {Permutation::from_cycles(6, "(1,2)"),
                                 Permutation::from_cycles(6, "(1,2,3,4,5,6)")};
    const Permutation images[2] = {Permutation::from_cycles(6, "(1,2)(3,4)(5,6)"),
                                   Permutation::from_cycles(6, "(1,2,3)(4,5)")};
    std::map<Permutation, Permutation> t;
    std::deque<Permutation> queue;
    t.emplace(Permutation(6), Permutation(6));
    queue.push_back(Permutation(6));
    while (!queue.empty()) {
      const Permutation g = queue.front();
      queue.pop_front();
      const Permutation img = t.at(g);
      for (int s = 0; s < 2; ++s) {
        Permutation h = g * gens[s];
        if (t.count(h)) continue;
        t.emplace(h, img * images[s]);
        queue.push_back(std::move(h));
      }
    }
    return t;
  }();
  return table;
}

}  // namespace

Permutation nu_map(const Permutation& g) {
  if (g.degree() != 6) throw PreconditionError("nu is defined on S_6");
  return nu_table().at(g);
}

NuReport verify_nu() {
  const auto& t = nu_table();
  NuReport r;
  r.elements = static_cast<int>(t.size());
  std::set<Permutation> image;
  for (const auto& [g, h] : t) image.insert(h);
  r.bijective = t.size() == 720 && image.size() == 720;
  r.homomorphism = t.size() == 720;
  for (const auto& [x, nx] : t) {
    for (const auto& [y, ny] : t) {
      if (t.at(x * y) != nx * ny) {
        r.homomorphism = false;
        break;
      }
    }
    if (!r.homomorphism) break;
  }
  r.preserves_transpositions = true;
  for (const auto& [g, h] : t) {
    if (g.cycle_type() == std::vector<int>{2, 1, 1, 1, 1} &&
        h.cycle_type() != std::vector<int>{2, 1, 1, 1, 1}) {
      r.preserves_transpositions = false;
      break;
    }
  }
  return r;
}

}  // namespace braidlab
