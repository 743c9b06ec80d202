#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include <nlohmann/json.hpp>

#include "commalg/field.hpp"
#include "commalg/monomial_ideal.hpp"
#include "commalg/pullback.hpp"
#include "commalg/report.hpp"

namespace commalg {

/// A = T/∩(F_i) for subsets F_i of {1..n} (1-based).
struct FFamilySpec {
  std::size_t n = 0;
  std::vector<std::vector<std::size_t>> subsets;

  /// Throws InvalidInput on empty or comparable subsets or out-of-range entries.
  void validate() const;
  std::vector<VarMask> masks() const;
  ContextPtr context() const { return VarContext::indexed(n); }
  PullbackFamily family() const;

  static FFamilySpec from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
};

struct FFamilyOptions {
  FieldSpec field;
  /// Linear forms (lists of 1-based variables) expected to generate the conductor over B.
  std::vector<std::vector<std::size_t>> parameters;
  /// k for which m^k is run through the trace test.
  std::vector<unsigned> trace_powers;
  std::optional<std::uint32_t> degree_bound;
  unsigned jobs = 1;
};

/// J_i = ∩_{j≠i} P_j, lifted to T.
std::vector<MonomialIdeal> complement_intersections(const ContextPtr& ctx, const std::vector<MonomialIdeal>& ideals);

VerificationReport f_family_report(const FFamilySpec& spec, const FFamilyOptions& opts = {});

struct ArtinianType {
  std::size_t length = 0;
  std::size_t socle_dim = 0;
};

/// Length and socle dimension of T/q. Throws InvalidInput unless T/q is Artinian.
ArtinianType socle_and_type(const MonomialIdeal& q);

/// True iff q is generated by pure powers of all the variables.
bool is_monomial_parameter_ideal(const MonomialIdeal& q);

/// A = k + q in S. q must be a monomial parameter ideal.
VerificationReport k_plus_q_report(const MonomialIdeal& q, std::optional<std::uint32_t> degree_bound = std::nullopt);

/// A = S ×_{S/q} S. q must have Artinian quotient.
VerificationReport fiber_product_report(const MonomialIdeal& q);

struct IdentityTrial {
  std::vector<MonomialIdeal> ideals;
  MonomialIdeal lhs;
  MonomialIdeal rhs;
  bool holds() const { return lhs == rhs; }
};

/// ∩(I_i + J_i) versus Σ J_i.
IdentityTrial complement_sum_identity(const std::vector<MonomialIdeal>& ideals);

/// A random nonzero proper monomial ideal with 1..max_gens generators of degree
/// 1..max_degree. Uses rng() directly so that streams are portable.
MonomialIdeal random_monomial_ideal(const ContextPtr& ctx, std::mt19937_64& rng, std::size_t max_gens,
                                    std::uint32_t max_degree);

/// Seeded random instances (2 ≤ ℓ ≤ 4, n ≤ 5, ≤ 4 generators of degree ≤ 3).
VerificationReport complement_sum_identity_suite(std::uint64_t seed, std::size_t trials);

}  // namespace commalg
