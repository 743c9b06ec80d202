#include <random>

#include <gtest/gtest.h>

#include "commalg/errors.hpp"
#include "commalg/families.hpp"
#include "commalg/oracles/oracles.hpp"
#include "commalg/s2_trace.hpp"
#include "printers.hpp"

using namespace commalg;
namespace or_ = commalg::oracles;

namespace {

VarMask set(std::initializer_list<int> vs) {
  VarMask m = 0;
  for (int v : vs) m |= VarMask{1} << (v - 1);
  return m;
}

MonomialIdeal make(const ContextPtr& ctx, std::vector<std::vector<std::uint32_t>> gens) {
  std::vector<Monomial> ms;
  for (auto& g : gens) ms.emplace_back(std::move(g));
  return MonomialIdeal(ctx, ms);
}

}  // namespace

TEST(QuotientRing, NonzerodivisorsAgreeWithColonOnBox) {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 40; ++t) {
    const auto ctx = VarContext::indexed(2 + rng() % 3);
    const MonomialIdeal a = random_monomial_ideal(ctx, rng, 3, 3);
    const QuotientRing r(a);
    const auto gens = or_::exponents(a);
    for (const auto& m : or_::box(ctx->size(), 1)) {
      bool nzd = true;
      for (const auto& u : or_::box(ctx->size(), 3)) {
        or_::Exps um(u);
        for (std::size_t v = 0; v < u.size(); ++v) um[v] += m[v];
        if (or_::in_ideal(gens, um) && !or_::in_ideal(gens, u)) nzd = false;
      }
      EXPECT_EQ(r.is_nonzerodivisor(Monomial(m)), nzd) << a.to_string();
    }
  }
}

TEST(QuotientRing, RejectsUnitIdeal) {
  EXPECT_THROW(QuotientRing(MonomialIdeal::unit(VarContext::indexed(2))), InvalidInput);
}

TEST(S2, MembershipAgreesWithFractionOracle) {
  std::mt19937_64 rng(42);
  int positives = 0;
  int negatives = 0;
  for (int t = 0; t < 120; ++t) {
    const auto ctx = VarContext::indexed(2 + rng() % 3);
    const MonomialIdeal a = random_monomial_ideal(ctx, rng, 3, 2);
    const Monomial m = random_monomial_ideal(ctx, rng, 1, 2).generators()[0];
    const Monomial d = random_monomial_ideal(ctx, rng, 1, 2).generators()[0];
    const QuotientRing r(a);
    if (!r.is_nonzerodivisor(d)) continue;
    const bool lib = s2_membership(r, m, d);
    EXPECT_EQ(lib, or_::s2_fraction_member(a, m.exponents(), d.exponents()));
    (lib ? positives : negatives)++;
  }
  EXPECT_GT(positives, 0);
  EXPECT_GT(negatives, 0);
}

TEST(S2, TwoPlanesGainTheIdempotents) {
  // T/((x1,x2) ∩ (x3,x4)) is not S2; its S2-ification is the product of the planes.
  const auto ctx = VarContext::indexed(4);
  const QuotientRing r(intersect(MonomialIdeal::of_variables(ctx, set({1, 2})), MonomialIdeal::of_variables(ctx, set({3, 4}))));
  const Monomial x1 = Monomial::variable(4, 0);
  const Monomial x3 = Monomial::variable(4, 2);
  const Monomial d = x1 * x3;  // not a nonzerodivisor
  EXPECT_THROW(s2_membership(r, x1, d), InvalidInput);
  const PullbackFamily fam = PullbackFamily::intersection(ctx, {set({1, 2}), set({3, 4})});
  EXPECT_TRUE(s2_equals_B_test(fam, {Polynomial::linear_form(4, {0, 2}), Polynomial::linear_form(4, {1, 3})}));
}

TEST(S2, UnmixedComponentOfPrincipalIdeal) {
  const auto ctx = VarContext::indexed(2);
  const QuotientRing r = QuotientRing::ambient(ctx);
  EXPECT_EQ(unmixed_component_principal(r, Monomial({1, 1})), make(ctx, {{1, 1}}));
  const QuotientRing s(make(ctx, {{2, 0}, {1, 1}}));
  EXPECT_THROW(unmixed_component_principal(s, Monomial({1, 0})), InvalidInput);
}

TEST(Trace, MaximalIdealOfTwoPlanes) {
  const auto ctx = VarContext::indexed(4);
  const PullbackFamily fam = PullbackFamily::intersection(ctx, {set({1, 2}), set({3, 4})});
  for (unsigned k = 1; k <= 3; ++k) {
    const TraceVerdict v = trace_ideal_check(fam, power(MonomialIdeal::maximal(ctx), k), 6);
    EXPECT_TRUE(v.certificate.holds());
    EXPECT_EQ(v.is_trace, Verdict::Pass);
    EXPECT_EQ(v.endo_ring_is_B, Verdict::Pass);
  }
}

TEST(Trace, IdealInsideAComponentHasNoNonzerodivisor) {
  const auto ctx = VarContext::indexed(4);
  const PullbackFamily fam = PullbackFamily::intersection(ctx, {set({1, 2}), set({3, 4})});
  EXPECT_THROW(trace_ideal_check(fam, MonomialIdeal::of_variables(ctx, set({1, 2}))), InvalidInput);
}

TEST(Trace, PolynomialRing) {
  const auto ctx = VarContext::indexed(2);
  const QuotientRing r = QuotientRing::ambient(ctx);
  // Principal ideals are never trace ideals unless they are the whole ring.
  EXPECT_FALSE(trace_ideal_check(r, make(ctx, {{1, 0}})).is_trace);
  EXPECT_TRUE(trace_ideal_check(r, MonomialIdeal::maximal(ctx)).is_trace);
  EXPECT_TRUE(trace_ideal_check(r, make(ctx, {{2, 0}, {0, 1}})).is_trace);
}

TEST(Trace, VerdictNames) {
  EXPECT_EQ(to_string(Verdict::Pass), "pass");
  EXPECT_EQ(to_string(Verdict::VerifiedToBound), "verified-to-bound");
}
