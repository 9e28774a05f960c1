#include "braidlab/atom_pairs.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <tuple>

#include "braidlab/error.hpp"

namespace braidlab {

namespace {

NormalForm conjugate_by_simple_inverse(const GarsideStructure& g, const NormalForm& x,
                                       const Simple& s) {
  // s x s^-1
  return nf_multiply_simple_inverse(g, nf_left_multiply_simple(g, s, x), s);
}

bool is_atom_power(const GarsideStructure& g, const NormalForm& x, int k) {
  for (const auto& a : g.atoms()) {
    const NormalForm na = nf_of_simple(g, a);
    NormalForm p = nf_identity(g);
    const NormalForm step = k >= 0 ? na : nf_inverse(g, na);
    for (int i = 0; i < (k >= 0 ? k : -k); ++i) p = nf_multiply(g, p, step);
    if (p == x) return true;
  }
  return false;
}

struct PairState {
  NormalForm x;
  NormalForm y;
  NormalForm u;  // accumulated conjugator
};

// Best-first walk over simultaneous conjugates (x^u, y^u) with (xy)^u kept in
// SC(xy), cheapest l(x^u) + l(y^u) first. Stops at the first state accepted
// by `goal` or after `max_states` states.
template <class Goal>
std::optional<PairState> search_pairs_on_circuits(const GarsideStructure& g, const NormalForm& x,
                                                  const NormalForm& y,
                                                  const SlidingCircuitOptions& options,
                                                  std::size_t max_states, Goal goal) {
  const NormalForm z = nf_multiply(g, x, y);
  const SlidingCircuits sc = sliding_circuits(g, z, options);
  std::vector<Simple> simples = g.enumerate_simples(options.simple_caps);
  simples.erase(std::remove_if(simples.begin(), simples.end(),
                               [](const Simple& s) { return s.is_identity(); }),
                simples.end());

  using Key = std::pair<NormalForm, NormalForm>;
  std::map<Key, bool> seen;
  std::vector<PairState> states;
  using Item = std::tuple<int, std::size_t>;  // (cost, index), min-heap
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> open;
  auto push = [&](PairState st) {
    Key key{st.x, st.y};
    if (seen.count(key)) return;
    seen.emplace(std::move(key), true);
    const int cost = st.x.canonical_length() + st.y.canonical_length();
    states.push_back(std::move(st));
    open.emplace(cost, states.size() - 1);
  };
  for (const auto& e : sc.entries) {
    push({nf_conjugate(g, x, e.conjugator), nf_conjugate(g, y, e.conjugator), e.conjugator});
  }
  while (!open.empty()) {
    const auto [cost, index] = open.top();
    open.pop();
    const PairState st = states[index];
    if (goal(st, sc)) return st;
    if (states.size() >= max_states) continue;
    for (const auto& s : simples) {
      const NormalForm zs = nf_conjugate_by_simple(g, nf_multiply(g, st.x, st.y), s);
      if (sc.find(zs) == nullptr) continue;
      push({nf_conjugate_by_simple(g, st.x, s), nf_conjugate_by_simple(g, st.y, s),
            nf_multiply_simple(g, st.u, s)});
    }
  }
  return std::nullopt;
}

constexpr std::size_t kPairSearchStates = 2000;

}  // namespace

std::optional<Simple> as_atom(const GarsideStructure& g, const NormalForm& x) {
  if (x.inf != 0 || x.factors.size() != 1) return std::nullopt;
  if (g.length(x.factors.front()) != 1) return std::nullopt;
  return x.factors.front();
}

AtomConjugateShape atom_conjugate_shape(const GarsideStructure& g, const NormalForm& x) {
  AtomConjugateShape shape;
  const int r = x.canonical_length();
  if (r % 2 == 0) {
    shape.detail = "canonical length " + std::to_string(r) + " is even";
    return shape;
  }
  const int p = (r - 1) / 2;
  shape.p = p;
  if (x.inf != -p) {
    shape.detail = "infimum " + std::to_string(x.inf) + " differs from " + std::to_string(-p);
    return shape;
  }
  if (g.length(x.factors[static_cast<std::size_t>(p)]) != 1) {
    shape.detail = "middle factor is not an atom";
    return shape;
  }
  for (int i = 1; i <= p; ++i) {
    const NormalForm a = nf_of_simple(g, x.factors[static_cast<std::size_t>(p - i)]);
    const NormalForm b = nf_of_simple(g, x.factors[static_cast<std::size_t>(p + i)]);
    const NormalForm prod = nf_multiply(g, nf_multiply(g, a, nf_delta_power(g, i - 1)), b);
    if (prod != nf_delta_power(g, i)) {
      shape.detail = "pair " + std::to_string(i) + " does not multiply to delta^" + std::to_string(i);
      return shape;
    }
  }
  shape.holds = true;
  return shape;
}

std::optional<AtomPairResult> reduce_to_atom_pair(const GarsideStructure& g, const BraidWord& x,
                                                  const BraidWord& y,
                                                  const SlidingCircuitOptions& options) {
  const Simple s1 = g.artin_atom(1);
  const auto cert = conjugacy_solve(g, y, g.word_of(s1), options);
  if (!cert.conjugate) return std::nullopt;
  NormalForm u = normal_form(g, *cert.witness);
  NormalForm xn = nf_conjugate(g, normal_form(g, x), u);
  Simple ys = s1;

  while (xn.canonical_length() > 1) {
    const int before = xn.canonical_length();
    const Simple b = final_factor(g, xn);
    const Simple c = to_right_form(g, xn).factors.front();
    Simple next_y;
    if (g.product_is_simple(b, ys)) {
      // b y = y' b, so conjugating by b^-1 keeps y an atom and drops a layer.
      auto y1 = as_atom(g, conjugate_by_simple_inverse(g, nf_of_simple(g, ys), b));
      if (!y1) return std::nullopt;
      next_y = *y1;
      xn = conjugate_by_simple_inverse(g, xn, b);
      u = nf_multiply_simple_inverse(g, u, b);
    } else if (g.product_is_simple(ys, c)) {
      auto y1 = as_atom(g, nf_conjugate_by_simple(g, nf_of_simple(g, ys), c));
      if (!y1) return std::nullopt;
      next_y = *y1;
      xn = nf_conjugate_by_simple(g, xn, c);
      u = nf_multiply_simple(g, u, c);
    } else {
      return std::nullopt;
    }
    ys = next_y;
    if (xn.canonical_length() >= before) return std::nullopt;
  }
  auto xa = as_atom(g, xn);
  if (!xa) return std::nullopt;
  return AtomPairResult{to_word(g, u), *xa, ys};
}

std::optional<BraidWord> align_atom_pair(const GarsideStructure& g, const Simple& x,
                                         const Simple& y) {
  using Pair = std::pair<Simple, Simple>;
  const Pair target{g.artin_atom(1), g.artin_atom(2)};
  std::vector<Simple> simples = g.enumerate_simples();
  std::map<Pair, std::pair<Pair, NormalForm>> parent;  // pair -> (previous, step conjugator)
  std::queue<Pair> queue;
  const Pair start{x, y};
  parent.emplace(start, std::make_pair(start, nf_identity(g)));
  queue.push(start);
  while (!queue.empty()) {
    const Pair cur = queue.front();
    queue.pop();
    if (cur == target) break;
    const NormalForm nx = nf_of_simple(g, cur.first);
    const NormalForm ny = nf_of_simple(g, cur.second);
    for (const auto& s : simples) {
      if (s.is_identity()) continue;
      for (int dir = 0; dir < 2; ++dir) {
        const NormalForm cx = dir == 0 ? nf_conjugate_by_simple(g, nx, s)
                                       : conjugate_by_simple_inverse(g, nx, s);
        auto ax = as_atom(g, cx);
        if (!ax) continue;
        const NormalForm cy = dir == 0 ? nf_conjugate_by_simple(g, ny, s)
                                       : conjugate_by_simple_inverse(g, ny, s);
        auto ay = as_atom(g, cy);
        if (!ay) continue;
        const Pair next{*ax, *ay};
        if (parent.count(next)) continue;
        const NormalForm step = dir == 0 ? nf_of_simple(g, s)
                                         : nf_multiply_simple_inverse(g, nf_identity(g), s);
        parent.emplace(next, std::make_pair(cur, step));
        queue.push(next);
      }
    }
  }
  if (!parent.count(target)) return std::nullopt;
  std::vector<NormalForm> steps;
  for (Pair cur = target; cur != start; cur = parent.at(cur).first) {
    steps.push_back(parent.at(cur).second);
  }
  NormalForm u = nf_identity(g);
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) u = nf_multiply(g, u, *it);
  return to_word(g, u);
}

std::optional<BraidWord> braid_pair_to_standard(const GarsideStructure& g, const BraidWord& x,
                                                const BraidWord& y,
                                                const SlidingCircuitOptions& options) {
  const BraidWord xyx = compose(compose(x, y), x);
  const BraidWord yxy = compose(compose(y, x), y);
  if (!words_equal(g, xyx, yxy)) throw PreconditionError("inputs do not satisfy xyx = yxy");
  if (words_equal(g, x, y)) throw PreconditionError("inputs must be distinct");
  auto reduced = reduce_to_atom_pair(g, x, y, options);
  if (!reduced) return std::nullopt;
  auto align = align_atom_pair(g, reduced->x, reduced->y);
  if (!align) return std::nullopt;
  BraidWord u = compose(reduced->u, *align);
  if (!words_equal(g, conjugate(x, u), BraidWord(g.strands(), {1})) ||
      !words_equal(g, conjugate(y, u), BraidWord(g.strands(), {2}))) {
    return std::nullopt;
  }
  return u;
}

std::optional<BraidWord> power_pair_to_standard(const GarsideStructure& g, const BraidWord& a,
                                                const BraidWord& b, int k, int l,
                                                const SlidingCircuitOptions& options) {
  const int n = g.strands();
  const BraidWord z = compose(power(a, k), power(b, l));
  const BraidWord model = compose(power(BraidWord(n, {1}), k), power(BraidWord(n, {2}), l));
  if (!conjugacy_solve(g, z, model, options).conjugate) {
    throw PreconditionError("a^k b^l is not conjugate to sigma_1^k sigma_2^l");
  }
  std::optional<BraidWord> found;
  auto goal = [&](const PairState& st, const SlidingCircuits&) {
    auto xa = as_atom(g, st.x);
    auto ya = xa ? as_atom(g, st.y) : std::nullopt;
    if (!ya) return false;
    auto align = align_atom_pair(g, *xa, *ya);
    if (!align) return false;
    BraidWord u = compose(to_word(g, st.u), *align);
    if (!words_equal(g, conjugate(a, u), BraidWord(n, {1})) ||
        !words_equal(g, conjugate(b, u), BraidWord(n, {2}))) {
      return false;
    }
    found = std::move(u);
    return true;
  };
  search_pairs_on_circuits(g, normal_form(g, a), normal_form(g, b), options, kPairSearchStates,
                           goal);
  return found;
}

std::optional<DichotomyWitness> product_dichotomy(const GarsideStructure& g, const BraidWord& x,
                                                  int k, const BraidWord& y, int l,
                                                  const SlidingCircuitOptions& options) {
  std::optional<DichotomyWitness> found;
  auto goal = [&](const PairState& st, const SlidingCircuits& sc) {
    if (is_atom_power(g, st.x, k) && is_atom_power(g, st.y, l)) {
      found = DichotomyWitness{DichotomyWitness::Case::AtomPowers, to_word(g, st.u)};
      return true;
    }
    const NormalForm zu = nf_multiply(g, st.x, st.y);
    if (sc.find(zu) != nullptr &&
        zu.canonical_length() == st.x.canonical_length() + st.y.canonical_length()) {
      found = DichotomyWitness{DichotomyWitness::Case::AdditiveOnCircuit, to_word(g, st.u)};
      return true;
    }
    return false;
  };
  search_pairs_on_circuits(g, normal_form(g, x), normal_form(g, y), options, kPairSearchStates,
                           goal);
  return found;
}

}  // namespace braidlab
