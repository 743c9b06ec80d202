#include "commalg/polynomial.hpp"

#include <sstream>

namespace commalg {

Polynomial Polynomial::from_monomial(const Monomial& m, const mpq_class& c) {
  Polynomial p;
  p.add_term(m, c);
  return p;
}

Polynomial Polynomial::constant(std::size_t n, const mpq_class& c) {
  return from_monomial(Monomial::one(n), c);
}

Polynomial Polynomial::linear_form(std::size_t n, const std::vector<std::size_t>& vars) {
  Polynomial p;
  for (auto v : vars) p.add_term(Monomial::variable(n, v), 1);
  return p;
}

void Polynomial::add_term(const Monomial& m, const mpq_class& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const auto d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_) {
    if (m.degree() != d) return false;
  }
  return true;
}

std::uint32_t Polynomial::degree() const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

bool Polynomial::is_monomial() const {
  return terms_.size() == 1 && terms_.begin()->second == 1;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial r;
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, c1 * c2);
  }
  return r;
}

Polynomial Polynomial::operator*(const Monomial& m) const {
  Polynomial r;
  for (const auto& [t, c] : terms_) r.terms_.emplace(t * m, c);
  return r;
}

std::string Polynomial::to_string(const VarContext& ctx) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    mpq_class coeff = c;
    if (!first) {
      out << (sgn(coeff) < 0 ? " - " : " + ");
      coeff = abs(coeff);
    } else if (sgn(coeff) < 0) {
      out << '-';
      coeff = abs(coeff);
    }
    first = false;
    if (m.is_one()) {
      out << coeff.get_str();
    } else {
      if (coeff != 1) out << coeff.get_str() << '*';
      out << m.to_string(ctx);
    }
  }
  return out.str();
}

}  // namespace commalg
