#include "commalg/field.hpp"

#include <cctype>

#include "commalg/errors.hpp"

namespace commalg {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (!is_prime(p)) throw InvalidInput("field characteristic " + std::to_string(p) + " is not prime");
  FieldSpec f;
  f.kind = Kind::Prime;
  f.p = p;
  return f;
}

FieldSpec FieldSpec::parse(const std::string& text) {
  if (text == "q" || text == "Q" || text == "qq" || text == "QQ") return rationals();
  std::string digits;
  if (text.rfind("fp:", 0) == 0) {
    digits = text.substr(3);
  } else if (text.rfind("gf:", 0) == 0) {
    digits = text.substr(3);
  } else if (!text.empty() && (text[0] == 'f' || text[0] == 'F')) {
    digits = text.substr(1);
  }
  if (digits.empty()) throw InvalidInput("unrecognized field '" + text + "' (expected q or fp:<p>)");
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw InvalidInput("unrecognized field '" + text + "' (expected q or fp:<p>)");
    }
  }
  unsigned long long p = std::stoull(digits);
  if (p > 0xFFFFFFFFull) throw InvalidInput("field characteristic too large: " + digits);
  return prime(static_cast<std::uint32_t>(p));
}

std::string FieldSpec::to_string() const {
  return is_rational() ? "q" : "fp:" + std::to_string(p);
}

PrimeField::PrimeField(std::uint64_t prime) : p(prime) {
  if (!is_prime(prime) || prime >= (1ull << 32)) {
    throw InvalidInput("PrimeField requires a prime below 2^32");
  }
}

PrimeField::Elem PrimeField::from_int(long v) const {
  long r = v % static_cast<long>(p);
  if (r < 0) r += static_cast<long>(p);
  return static_cast<Elem>(r);
}

PrimeField::Elem PrimeField::inverse(Elem a) const {
  if (a % p == 0) throw Error("division by zero in F_" + std::to_string(p));
  Elem result = 1;
  Elem base = a % p;
  std::uint64_t e = p - 2;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

ScalarField::Elem ScalarField::normalize(const Elem& v) const {
  if (spec_.is_rational()) return v;
  return from_rational(v);
}

ScalarField::Elem ScalarField::from_rational(const mpq_class& v) const {
  if (spec_.is_rational()) return v;
  mpz_class p = spec_.p;
  mpz_class num = v.get_num() % p;
  if (num < 0) num += p;
  mpz_class den = v.get_den() % p;
  if (den == 0) throw InvalidInput("value has denominator divisible by the characteristic");
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
  mpz_class r = (num * inv) % p;
  return mpq_class(r);
}

ScalarField::Elem ScalarField::div(const Elem& a, const Elem& b) const {
  if (is_zero(b)) throw Error("division by zero");
  if (spec_.is_rational()) return a / b;
  return from_rational(a / b);
}

}  // namespace commalg
