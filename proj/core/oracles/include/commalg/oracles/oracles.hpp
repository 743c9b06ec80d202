#pragma once

// Slow, independent reference computations used by the tests and the property
// suites. Everything here works on raw exponent vectors and exhaustive
// enumeration; nothing calls into the decomposition or linear-algebra code it
// is meant to check.

#include <cstdint>
#include <vector>

#include "commalg/monomial_ideal.hpp"

namespace commalg::oracles {

using Exps = std::vector<std::uint32_t>;

bool divides(const Exps& a, const Exps& b);
/// Some generator divides m.
bool in_ideal(const std::vector<Exps>& gens, const Exps& m);
std::vector<Exps> exponents(const MonomialIdeal& i);

/// Every exponent vector with entries ≤ cap.
std::vector<Exps> box(std::size_t n, std::uint32_t cap);

/// Membership in a and b agrees on the box of side cap.
bool same_on_box(const MonomialIdeal& a, const MonomialIdeal& b, std::uint32_t cap);

/// ∩(I_i + J_i) == Σ J_i, with J_i = ∩_{k≠i} I_k, decided monomial by monomial
/// on the box of side cap.
bool complement_sum_identity_on_box(const std::vector<MonomialIdeal>& ideals, std::uint32_t cap);

/// ht of (J + a)/a by enumerating all 2^n monomial primes; a large value
/// (n + 1) when J + a is the unit ideal.
int height_in_quotient(const MonomialIdeal& j, const MonomialIdeal& a);

/// m/d lies in the (S2)-ification of T/a: the ideal J generated by the
/// monomials u of degree ≤ max_degree with u·m ∈ (d) + a has ht ≥ 2 in T/a.
bool s2_fraction_member(const MonomialIdeal& a, const Exps& m, const Exps& d, std::uint32_t max_degree = 4);

/// A monomial u is in the conductor of T/∩P_i in ⊕T/P_i iff for every i with
/// u ∉ P_i, u lies in every other P_j.
bool in_f_family_conductor(const std::vector<std::uint64_t>& supports, const Exps& u);

/// Gaps of ⟨gens⟩ below limit, by closing {0} under adding generators.
std::vector<std::uint32_t> semigroup_gaps(const std::vector<std::uint32_t>& gens, std::uint32_t limit);

}  // namespace commalg::oracles
