#include <random>

#include <gtest/gtest.h>

#include "commalg/errors.hpp"
#include "commalg/families.hpp"
#include "commalg/monomial_ideal.hpp"
#include "commalg/oracles/oracles.hpp"
#include "printers.hpp"

using namespace commalg;
namespace or_ = commalg::oracles;

namespace {

MonomialIdeal make(const ContextPtr& ctx, std::vector<std::vector<std::uint32_t>> gens) {
  std::vector<Monomial> ms;
  for (auto& g : gens) ms.emplace_back(std::move(g));
  return MonomialIdeal(ctx, ms);
}

Monomial mono(const or_::Exps& e) { return Monomial(e); }

struct RandomPair {
  ContextPtr ctx;
  MonomialIdeal a;
  MonomialIdeal b;
};

std::vector<RandomPair> random_pairs(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::vector<RandomPair> out;
  for (std::size_t t = 0; t < count; ++t) {
    const ContextPtr ctx = VarContext::indexed(2 + rng() % 3);
    MonomialIdeal a = random_monomial_ideal(ctx, rng, 4, 3);
    MonomialIdeal b = random_monomial_ideal(ctx, rng, 4, 3);
    out.push_back({ctx, std::move(a), std::move(b)});
  }
  return out;
}

}  // namespace

TEST(Monomial, DivisionAndLcm) {
  const Monomial a({2, 0, 1});
  const Monomial b({1, 3, 1});
  EXPECT_EQ(a.lcm(b), Monomial({2, 3, 1}));
  EXPECT_EQ(a.gcd(b), Monomial({1, 0, 1}));
  EXPECT_EQ(a.colon(b), Monomial({1, 0, 0}));
  EXPECT_TRUE(Monomial({1, 0, 1}).divides(a));
  EXPECT_FALSE(a.divides(b));
  EXPECT_EQ(a.degree(), 3u);
  EXPECT_EQ(Monomial::variable(3, 1, 4).pure_power_variable(), 1u);
}

TEST(Monomial, DegrevlexBreaksTiesOnLastVariable) {
  // x1*x3 < x2^2 in degrevlex: smaller last exponent wins.
  EXPECT_TRUE(degrevlex_less(Monomial({1, 0, 1}), Monomial({0, 2, 0})));
  EXPECT_TRUE(degrevlex_less(Monomial({1, 0, 0}), Monomial({0, 0, 2})));
}

TEST(MonomialIdeal, MinimalGenerators) {
  const auto ctx = VarContext::indexed(2);
  const MonomialIdeal i = make(ctx, {{2, 0}, {1, 1}, {2, 1}, {3, 0}});
  EXPECT_EQ(i.generators().size(), 2u);
  EXPECT_TRUE(i.contains(Monomial({5, 0})));
  EXPECT_FALSE(i.contains(Monomial({0, 5})));
}

TEST(MonomialIdeal, OperationsAgreeWithDivisibilityOracle) {
  for (const auto& [ctx, a, b] : random_pairs(11, 60)) {
    const auto ga = or_::exponents(a);
    const auto gb = or_::exponents(b);
    const MonomialIdeal meet = intersect(a, b);
    const MonomialIdeal sum = a + b;
    const MonomialIdeal prod = a * b;
    const Monomial probe = b.generators().front();
    const MonomialIdeal quot = colon(a, probe);
    const MonomialIdeal rad = radical(a);
    for (const auto& u : or_::box(ctx->size(), 4)) {
      const bool in_a = or_::in_ideal(ga, u);
      const bool in_b = or_::in_ideal(gb, u);
      ASSERT_EQ(meet.contains(mono(u)), in_a && in_b);
      ASSERT_EQ(sum.contains(mono(u)), in_a || in_b);
      bool in_prod = false;
      for (const auto& g : ga) {
        for (const auto& h : gb) {
          or_::Exps gh(g.size());
          for (std::size_t v = 0; v < g.size(); ++v) gh[v] = g[v] + h[v];
          in_prod = in_prod || or_::divides(gh, u);
        }
      }
      ASSERT_EQ(prod.contains(mono(u)), in_prod);
      or_::Exps shifted(u);
      for (std::size_t v = 0; v < u.size(); ++v) shifted[v] += probe[v];
      ASSERT_EQ(quot.contains(mono(u)), or_::in_ideal(ga, shifted));
      // u ∈ rad a iff u^3 ∈ a (generators have degree ≤ 3)
      or_::Exps cube(u);
      for (auto& e : cube) e *= 3;
      ASSERT_EQ(rad.contains(mono(u)), or_::in_ideal(ga, cube));
    }
  }
}

TEST(MonomialIdeal, IrreducibleDecompositionIntersectsBack) {
  for (const auto& [ctx, a, b] : random_pairs(12, 40)) {
    const auto comps = irreducible_decomposition(a);
    for (const auto& c : comps) {
      for (const auto& g : c.generators()) EXPECT_TRUE(g.pure_power_variable().has_value());
    }
    EXPECT_EQ(intersect_all(comps), a);
    const auto primary = primary_decomposition(a);
    std::vector<MonomialIdeal> parts;
    for (const auto& p : primary) {
      parts.push_back(p.component);
      EXPECT_EQ(radical(p.component), p.prime.ideal());
    }
    EXPECT_EQ(intersect_all(parts), a);
  }
}

TEST(MonomialIdeal, MinimalPrimesByEnumeration) {
  for (const auto& [ctx, a, b] : random_pairs(13, 40)) {
    const std::size_t n = ctx->size();
    std::vector<VarMask> containing;
    for (VarMask p = 0; p < (VarMask{1} << n); ++p) {
      bool ok = true;
      for (const auto& g : a.generators()) ok = ok && (g.support() & p) != 0;
      if (ok) containing.push_back(p);
    }
    std::vector<VarMask> expected;
    for (VarMask p : containing) {
      bool minimal = true;
      for (VarMask q : containing) minimal = minimal && !(q != p && (q & p) == q);
      if (minimal) expected.push_back(p);
    }
    std::vector<VarMask> got;
    for (const auto& p : minimal_primes(a)) got.push_back(p.support());
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, expected);
  }
}

TEST(MonomialIdeal, HeightInQuotientMatchesEnumeration) {
  for (const auto& [ctx, a, b] : random_pairs(14, 60)) {
    const int expected = or_::height_in_quotient(b, a);
    if (expected > static_cast<int>(ctx->size())) continue;
    EXPECT_EQ(height_in_quotient(b, a), expected) << a.to_string() << " / " << b.to_string();
  }
}

TEST(MonomialIdeal, StandardMonomialsOfArtinianQuotient) {
  const auto ctx = VarContext::indexed(3);
  const MonomialIdeal q = make(ctx, {{2, 0, 0}, {0, 3, 0}, {0, 0, 1}, {1, 1, 0}});
  std::size_t outside = 0;
  const auto gens = or_::exponents(q);
  for (const auto& u : or_::box(3, 3)) outside += or_::in_ideal(gens, u) ? 0 : 1;
  EXPECT_EQ(standard_monomials(q).size(), outside);
  EXPECT_TRUE(q.is_artinian());
  EXPECT_FALSE(make(ctx, {{2, 0, 0}, {0, 3, 0}}).is_artinian());
}

TEST(MonomialIdeal, HeightAndDimension) {
  const auto ctx = VarContext::indexed(4);
  const MonomialIdeal i = intersect(MonomialIdeal::of_variables(ctx, 0b0011), MonomialIdeal::of_variables(ctx, 0b1100));
  const HeightDim hd = height_and_dim(i);
  EXPECT_EQ(hd.height, 2);
  EXPECT_EQ(hd.dim, 2);
  EXPECT_EQ(unmixed_part(i), i);
  // Components of different heights are both minimal and both kept.
  const MonomialIdeal mixed = intersect(MonomialIdeal::of_variables(ctx, 0b0001), MonomialIdeal::of_variables(ctx, 0b0110));
  EXPECT_EQ(unmixed_part(mixed), mixed);
  // (x1^2, x1 x2) = (x1) ∩ (x1^2, x2): the embedded component goes.
  const MonomialIdeal embedded = make(ctx, {{2, 0, 0, 0}, {1, 1, 0, 0}});
  EXPECT_EQ(unmixed_part(embedded), MonomialIdeal::of_variables(ctx, 0b0001));
}

TEST(MonomialIdeal, PolarizationIsSquarefree) {
  const auto ctx = VarContext::indexed(2);
  const Polarization p = polarize(make(ctx, {{2, 0}, {1, 2}}));
  EXPECT_TRUE(p.ideal.is_squarefree());
  EXPECT_EQ(p.ideal.generators().size(), 2u);
}

TEST(MonomialIdeal, ComplementSumIdentity) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 40; ++t) {
    const ContextPtr ctx = VarContext::indexed(1 + rng() % 4);
    std::vector<MonomialIdeal> ideals;
    for (int i = 0; i < 3; ++i) ideals.push_back(random_monomial_ideal(ctx, rng, 3, 3));
    EXPECT_TRUE(complement_sum_identity(ideals).holds());
    EXPECT_TRUE(or_::complement_sum_identity_on_box(ideals, 3));
  }
}

TEST(MonomialIdeal, ContextMismatchIsRejected) {
  const auto a = MonomialIdeal::maximal(VarContext::indexed(2));
  const auto b = MonomialIdeal::maximal(VarContext::indexed(3));
  EXPECT_THROW(a + b, ContextMismatch);
}
