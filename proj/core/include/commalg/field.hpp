#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace commalg {

bool is_prime(std::uint64_t p);

/// Coefficient field: the rationals or a prime field F_p.
struct FieldSpec {
  enum class Kind { Rationals, Prime };

  Kind kind = Kind::Rationals;
  std::uint32_t p = 0;

  static FieldSpec rationals() { return {}; }
  static FieldSpec prime(std::uint32_t p);

  /// Accepts "q", "Q", "fp:<p>", "f<p>" and "gf:<p>".
  static FieldSpec parse(const std::string& text);

  bool is_rational() const { return kind == Kind::Rationals; }
  std::uint64_t characteristic() const { return is_rational() ? 0 : p; }
  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// Exact rational arithmetic.
struct Rationals {
  using Elem = mpq_class;

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(long v) const { return v; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem div(const Elem& a, const Elem& b) const { return a / b; }
  Elem neg(const Elem& a) const { return -a; }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
};

/// F_p with machine-word elements, p < 2^32.
struct PrimeField {
  using Elem = std::uint64_t;

  std::uint64_t p;

  explicit PrimeField(std::uint64_t prime);

  Elem zero() const { return 0; }
  Elem one() const { return 1 % p; }
  Elem from_int(long v) const;
  Elem add(Elem a, Elem b) const { return (a + b) % p; }
  Elem sub(Elem a, Elem b) const { return (a + p - b) % p; }
  Elem mul(Elem a, Elem b) const { return (a * b) % p; }
  Elem div(Elem a, Elem b) const { return mul(a, inverse(b)); }
  Elem neg(Elem a) const { return (p - a) % p; }
  Elem inverse(Elem a) const;
  bool is_zero(Elem a) const { return a == 0; }
};

/// Runtime-selected field with rational-number storage. Over F_p every value
/// is kept as its canonical integer representative in [0, p).
class ScalarField {
 public:
  using Elem = mpq_class;

  explicit ScalarField(FieldSpec spec) : spec_(spec) {}

  const FieldSpec& spec() const { return spec_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(long v) const { return normalize(Elem(v)); }
  /// Maps a rational into the field; throws if the denominator vanishes mod p.
  Elem from_rational(const mpq_class& v) const;
  Elem add(const Elem& a, const Elem& b) const { return normalize(a + b); }
  Elem sub(const Elem& a, const Elem& b) const { return normalize(a - b); }
  Elem mul(const Elem& a, const Elem& b) const { return normalize(a * b); }
  Elem div(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const { return normalize(-a); }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }

 private:
  Elem normalize(const Elem& v) const;

  FieldSpec spec_;
};

}  // namespace commalg
