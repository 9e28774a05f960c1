#include "braidlab/automorphism.hpp"

#include "braidlab/error.hpp"
#include "braidlab/named_elements.hpp"

namespace braidlab {

AutomorphismSpec AutomorphismSpec::lambda() {
  AutomorphismSpec s;
  s.factors_.push_back({Kind::Lambda, BraidWord(), 0});
  return s;
}

AutomorphismSpec AutomorphismSpec::inner(BraidWord g) {
  AutomorphismSpec s;
  s.factors_.push_back({Kind::Inner, std::move(g), 0});
  return s;
}

AutomorphismSpec AutomorphismSpec::sigma_tilde(int i) {
  if (i < 1) throw PreconditionError("sigma index must be positive");
  AutomorphismSpec s;
  s.factors_.push_back({Kind::SigmaTilde, BraidWord(), i});
  return s;
}

AutomorphismSpec AutomorphismSpec::delta_tilde() {
  AutomorphismSpec s;
  s.factors_.push_back({Kind::DeltaTilde, BraidWord(), 0});
  return s;
}

AutomorphismSpec AutomorphismSpec::phi() {
  return lambda().then_after(sigma_tilde(1)).then_after(sigma_tilde(3)).then_after(delta_tilde());
}

AutomorphismSpec AutomorphismSpec::then_after(const AutomorphismSpec& other) const {
  AutomorphismSpec s = *this;
  s.factors_.insert(s.factors_.end(), other.factors_.begin(), other.factors_.end());
  return s;
}

std::string AutomorphismSpec::describe() const {
  if (factors_.empty()) return "id";
  std::string out;
  for (const auto& f : factors_) {
    if (!out.empty()) out += " o ";
    switch (f.kind) {
      case Kind::Lambda:
        out += "Lambda";
        break;
      case Kind::Inner:
        out += "inner(" + f.conjugator.to_string() + ")";
        break;
      case Kind::SigmaTilde:
        out += "sigma" + std::to_string(f.index) + "~";
        break;
      case Kind::DeltaTilde:
        out += "Delta~";
        break;
    }
  }
  return out;
}

BraidWord apply_automorphism(const AutomorphismSpec& spec, const BraidWord& w) {
  const int n = w.strands();
  BraidWord x = w;
  const auto& fs = spec.factors();
  for (auto it = fs.rbegin(); it != fs.rend(); ++it) {
    switch (it->kind) {
      case AutomorphismSpec::Kind::Lambda: {
        std::vector<int> letters = x.letters();
        for (int& l : letters) l = -l;
        x = BraidWord(n, std::move(letters));
        break;
      }
      case AutomorphismSpec::Kind::Inner:
        x = conjugate(x, inverse(it->conjugator));
        break;
      case AutomorphismSpec::Kind::SigmaTilde: {
        if (it->index > n - 1) throw PreconditionError("sigma~ index out of range");
        x = conjugate(x, BraidWord(n, {-it->index}));
        break;
      }
      case AutomorphismSpec::Kind::DeltaTilde:
        x = conjugate(x, inverse(half_twist(n)));
        break;
    }
  }
  return x;
}

}  // namespace braidlab
