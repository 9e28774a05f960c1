#include "braidlab/matrix_groups.hpp"

#include <functional>

#include "braidlab/error.hpp"

namespace braidlab {

IntegerMatrix matrix_s1() { return IntegerMatrix({{1, -1}, {0, 1}}); }
IntegerMatrix matrix_s2() { return IntegerMatrix({{1, 0}, {1, 1}}); }
IntegerMatrix matrix_t() { return matrix_s1().unimodular_inverse() * matrix_s2(); }
IntegerMatrix matrix_u() { return matrix_s2() * matrix_s1().unimodular_inverse(); }

bool free_words_check(const std::vector<IntegerMatrix>& generators, int max_length) {
  if (generators.empty()) return true;
  const int size = generators.front().rows();
  std::vector<IntegerMatrix> letters;  // 2k = g_k, 2k+1 = g_k^-1
  for (const auto& g : generators) {
    if (g.rows() != size || g.cols() != size) {
      throw PreconditionError("generators must be square matrices of a common size");
    }
    letters.push_back(g);
    letters.push_back(g.unimodular_inverse());
  }
  const IntegerMatrix id = IntegerMatrix::identity(size);
  std::function<bool(const IntegerMatrix&, int, int)> search = [&](const IntegerMatrix& m, int last,
                                                                   int depth) {
    if (depth > 0 && m == id) return false;
    if (depth == max_length) return true;
    for (int l = 0; l < static_cast<int>(letters.size()); ++l) {
      if (last >= 0 && (l ^ 1) == last) continue;
      if (!search(m * letters[static_cast<std::size_t>(l)], l, depth + 1)) return false;
    }
    return true;
  };
  return search(id, -1, 0);
}

bool commutation_graph_connected(int n) {
  if (n < 2) throw PreconditionError("commutation graph needs n >= 2");
  const int v = n - 1;
  std::vector<bool> seen(static_cast<std::size_t>(v), false);
  std::vector<int> stack{0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    const int i = stack.back();
    stack.pop_back();
    for (int j = 0; j < v; ++j) {
      if (!seen[static_cast<std::size_t>(j)] && (i - j > 1 || j - i > 1)) {
        seen[static_cast<std::size_t>(j)] = true;
        ++reached;
        stack.push_back(j);
      }
    }
  }
  return reached == v;
}

}  // namespace braidlab
