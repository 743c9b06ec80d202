#pragma once

#include <optional>
#include <string>
#include <vector>

#include "commalg/monomial_ideal.hpp"
#include "commalg/polynomial.hpp"
#include "commalg/pullback.hpp"

namespace commalg {

/// A = T/a for a proper monomial ideal a (the zero ideal gives T itself).
class QuotientRing {
 public:
  explicit QuotientRing(MonomialIdeal defining);
  static QuotientRing ambient(ContextPtr ctx) { return QuotientRing(MonomialIdeal::zero(std::move(ctx))); }

  const MonomialIdeal& ideal() const { return ideal_; }
  const ContextPtr& context() const { return ideal_.context(); }
  /// Radicals of the irreducible components; {(0)} for the zero ideal.
  const std::vector<MonomialPrime>& associated_primes() const { return assoc_; }

  /// a : m == a.
  bool is_nonzerodivisor(const Monomial& m) const;
  /// f avoids every associated prime.
  bool is_nonzerodivisor(const Polynomial& f) const;

 private:
  MonomialIdeal ideal_;
  std::vector<MonomialPrime> assoc_;
};

/// Three-valued outcome: an exact yes, an exact no, or agreement through a
/// degree bound only.
enum class Verdict { Pass, Fail, VerifiedToBound };

std::string to_string(Verdict v);

/// U(aA) lifted to T: the unmixed part of (a) + 𝔞, or the unit ideal when aA = A.
MonomialIdeal unmixed_component_principal(const QuotientRing& r, const Monomial& a);

/// m/a lies in the (S2)-ification of A iff m ∈ U(aA).
bool s2_membership(const QuotientRing& r, const Polynomial& m, const Monomial& a);
bool s2_membership(const QuotientRing& r, const Monomial& m, const Monomial& a);

/// aB == U(aA) for a monomial non-zerodivisor a in the conductor
/// (Intersection mode).
bool s2_equals_B_test(const PullbackFamily& fam, const Monomial& a);
/// Σ a_i B == conductor for a system of forms; this is the form the test takes
/// when the a_i are not monomials.
bool s2_equals_B_test(const PullbackFamily& fam, const std::vector<Polynomial>& system);

struct TraceCertificate {
  int height_of_conductor = 0;
  bool equidimensional = false;
  bool ideal_inside_conductor = false;
  bool stable_under_B = false;

  bool holds() const { return height_of_conductor >= 2 && equidimensional && ideal_inside_conductor && stable_under_B; }
};

struct TraceVerdict {
  Verdict is_trace = Verdict::Fail;
  Verdict endo_ring_is_B = Verdict::Fail;
  TraceCertificate certificate;
  /// Degree bound of the colon comparison, when one was run.
  std::optional<std::uint32_t> bound;
};

/// Trace test for an ideal of A = T/∩P_i (Intersection mode). Requires I to
/// contain a non-zerodivisor and ht_A I ≥ 2. When the certificate holds the
/// verdict is exact; colons are then compared through `colon_bound` (if given)
/// and must agree. Without the certificate the colons decide, up to the bound.
TraceVerdict trace_ideal_check(const PullbackFamily& fam, const MonomialIdeal& i,
                               std::optional<std::uint32_t> colon_bound = std::nullopt);

struct QuotientTraceResult {
  bool is_trace = false;
  Monomial nonzerodivisor;
  /// Lifts of aR : I and aI : I, so that R : I = ring_colon / a and I : I = endo_colon / a.
  MonomialIdeal ring_colon;
  MonomialIdeal endo_colon;
};

/// Exact trace test R : I == I : I through a monomial non-zerodivisor a ∈ I.
QuotientTraceResult trace_ideal_check(const QuotientRing& r, const MonomialIdeal& i);

}  // namespace commalg
