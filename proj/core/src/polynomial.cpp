#include "braidlab/polynomial.hpp"

#include "braidlab/error.hpp"

namespace braidlab {

Polynomial Polynomial::constant(int variables, long long c) {
  Polynomial p(variables);
  p.add_term(Monomial(static_cast<std::size_t>(variables), 0), c);
  return p;
}

Polynomial Polynomial::variable(int variables, int i) {
  if (i < 1 || i > variables) throw PreconditionError("variable index out of range");
  Polynomial p(variables);
  Monomial m(static_cast<std::size_t>(variables), 0);
  m[static_cast<std::size_t>(i - 1)] = 1;
  p.add_term(m, 1);
  return p;
}

void Polynomial::add_term(const Monomial& m, long long c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (vars_ != other.vars_) throw PreconditionError("polynomials over different variables");
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (vars_ != other.vars_) throw PreconditionError("polynomials over different variables");
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.vars_ != b.vars_) throw PreconditionError("polynomials over different variables");
  Polynomial out(a.vars_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Polynomial::Monomial m = ma;
      for (std::size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

Polynomial operator*(long long c, const Polynomial& a) {
  return Polynomial::constant(a.vars_, c) * a;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    const long long a = c < 0 ? -c : c;
    std::string mono;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "e" + std::to_string(i + 1);
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    if (mono.empty()) out += std::to_string(a);
    else if (a != 1) out += std::to_string(a) + "*" + mono;
    else out += mono;
  }
  return out;
}

std::pair<Polynomial, Polynomial> generator_splitting_identity(int n) {
  if (n < 4) throw PreconditionError("the identity needs n >= 4");
  auto e = [n](int i) { return Polynomial::variable(n, i); };
  const Polynomial d12 = e(1) - e(2);
  const Polynomial lhs = static_cast<long long>(n - 2) * (d12 * e(3));
  Polynomial tail(n);
  for (int i = 3; i <= n; ++i) tail += e(i);
  Polynomial rhs = d12 * tail;
  for (int i = 4; i <= n; ++i) rhs += d12 * (e(3) - e(i));
  return {lhs, rhs};
}

}  // namespace braidlab
