#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace commalg {

/// Variables of an ambient polynomial ring k[x_1, ..., x_n].
class VarContext {
 public:
  explicit VarContext(std::vector<std::string> names);

  static std::shared_ptr<const VarContext> make(std::vector<std::string> names);
  /// Context with variables prefix1, ..., prefixn.
  static std::shared_ptr<const VarContext> indexed(std::size_t n, const std::string& prefix = "x");

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(const std::string& name) const;

  friend bool operator==(const VarContext& a, const VarContext& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
};

using ContextPtr = std::shared_ptr<const VarContext>;

bool same_context(const ContextPtr& a, const ContextPtr& b);

/// Bitmask of variable indices. Supports are limited to 64 variables.
using VarMask = std::uint64_t;

/// Exponent vector x^e.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t n) : exps_(n, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

  static Monomial one(std::size_t n) { return Monomial(n); }
  static Monomial variable(std::size_t n, std::size_t i, std::uint32_t power = 1);
  static Monomial from_mask(std::size_t n, VarMask mask);

  std::size_t size() const { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  std::uint32_t& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<std::uint32_t>& exponents() const { return exps_; }

  std::uint32_t degree() const;
  bool is_one() const;
  bool is_squarefree() const;
  /// Indices of variables with positive exponent.
  VarMask support() const;
  /// True iff this divides `other`.
  bool divides(const Monomial& other) const;
  /// The single variable index when this is a pure power x_i^a (a >= 1).
  std::optional<std::size_t> pure_power_variable() const;

  Monomial operator*(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;
  /// x^max(e - f, 0): generator of the principal colon (x^e) : x^f.
  Monomial colon(const Monomial& other) const;

  std::string to_string(const VarContext& ctx) const;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::uint32_t> exps_;
};

/// Degree reverse lexicographic order: a < b.
bool degrevlex_less(const Monomial& a, const Monomial& b);

/// Every monomial of total degree d in the variables of `allowed`.
std::vector<Monomial> monomials_of_degree(std::size_t n, std::uint32_t d, VarMask allowed);
std::vector<Monomial> monomials_of_degree(std::size_t n, std::uint32_t d);

VarMask full_mask(std::size_t n);
int popcount(VarMask m);

}  // namespace commalg
