#pragma once

#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "commalg/monomial.hpp"

namespace commalg {

/// Polynomial with rational coefficients in a fixed number of variables.
class Polynomial {
 public:
  using Terms = std::map<Monomial, mpq_class>;

  Polynomial() = default;

  static Polynomial from_monomial(const Monomial& m, const mpq_class& c = 1);
  static Polynomial constant(std::size_t n, const mpq_class& c);
  /// Sum of the listed variables, e.g. x1 + x3 + x5.
  static Polynomial linear_form(std::size_t n, const std::vector<std::size_t>& vars);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_homogeneous() const;
  /// Degree of a homogeneous polynomial (maximum term degree otherwise); 0 for zero.
  std::uint32_t degree() const;
  bool is_monomial() const;

  void add_term(const Monomial& m, const mpq_class& c);

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Monomial& m) const;

  std::string to_string(const VarContext& ctx) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  Terms terms_;
};

}  // namespace commalg
