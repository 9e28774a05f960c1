#include "braidlab/named_elements.hpp"

#include "braidlab/error.hpp"

namespace braidlab {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw PreconditionError(what);
}

}  // namespace

BraidWord half_twist(int n) {
  require(n >= 1, "half twist needs n >= 1");
  std::vector<int> letters;
  for (int i = 1; i <= n - 1; ++i) {
    for (int j = 1; j <= n - i; ++j) letters.push_back(j);
  }
  return BraidWord(n, std::move(letters));
}

BraidWord band_delta(int n) {
  require(n >= 1, "band delta needs n >= 1");
  std::vector<int> letters;
  for (int i = n - 1; i >= 1; --i) letters.push_back(i);
  return BraidWord(n, std::move(letters));
}

BraidWord band_generator(int n, int i, int j) {
  if (i > j) std::swap(i, j);
  require(1 <= i && i < j && j <= n, "band generator indices out of range");
  std::vector<int> letters;
  for (int k = j - 1; k > i; --k) letters.push_back(k);
  letters.push_back(i);
  for (int k = i + 1; k <= j - 1; ++k) letters.push_back(-k);
  return BraidWord(n, std::move(letters));
}

BraidWord elem_u(int n) {
  require(n >= 3, "u needs n >= 3");
  return BraidWord(n, {2, -1});
}

BraidWord elem_t(int n) {
  require(n >= 3, "t needs n >= 3");
  return BraidWord(n, {-1, 2});
}

BraidWord elem_v(int n) {
  require(n >= 3, "v needs n >= 3");
  return BraidWord(n, {1, 2, -1, -1});
}

BraidWord elem_c() { return BraidWord(4, {3, -1}); }

BraidWord elem_w() {
  BraidWord w(4, {2});
  w.append(elem_c()).append_letter(-2);
  return w;
}

BraidWord elem_d() {
  BraidWord d(4, {1, 1, 1, 3, 3, 3});
  d.append(inverse(half_twist(4)));
  return d;
}

BraidWord elem_tau(int n) {
  require(n >= 4, "tau needs n >= 4");
  // Trivial tubular braid: the two interiors are placed side by side.
  BraidWord tau(n);
  for (int k = 0; k < (n - 2) * (n - 3); ++k) tau.append_letter(1);
  const BraidWord inner = power(half_twist(n - 2), -2);
  for (int x : inner.letters()) tau.append_letter(x > 0 ? x + 2 : x - 2);
  return tau;
}

BraidWord named_element(NamedTag tag, int n, int i, int j) {
  switch (tag) {
    case NamedTag::Delta:
      return half_twist(n);
    case NamedTag::BandGen:
      return band_generator(n, i, j);
    case NamedTag::U:
      return elem_u(n);
    case NamedTag::V:
      return elem_v(n);
    case NamedTag::T:
      return elem_t(n);
    case NamedTag::W:
      require(n == 4, "w is defined in B4");
      return elem_w();
    case NamedTag::C:
      require(n == 4, "c is defined in B4");
      return elem_c();
    case NamedTag::D:
      require(n == 4, "d is defined in B4");
      return elem_d();
    case NamedTag::Tau:
      return elem_tau(n);
  }
  throw PreconditionError("unknown named element");
}

}  // namespace braidlab
