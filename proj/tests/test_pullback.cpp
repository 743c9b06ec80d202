#include <random>

#include <gtest/gtest.h>

#include "commalg/errors.hpp"
#include "commalg/families.hpp"
#include "commalg/oracles/oracles.hpp"
#include "commalg/pullback.hpp"
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

std::size_t colength(const MonomialIdeal& q, std::uint32_t cap) {
  const auto gens = or_::exponents(q);
  std::size_t out = 0;
  for (const auto& u : or_::box(q.num_vars(), cap)) out += or_::in_ideal(gens, u) ? 0 : 1;
  return out;
}

}  // namespace

TEST(Pullback, IntersectionBasis) {
  const auto ctx = VarContext::indexed(4);
  const PullbackFamily fam = PullbackFamily::intersection(ctx, {set({1, 2}), set({3, 4})});
  EXPECT_EQ(fam.num_components(), 2u);
  // x1 survives only in the component T/(x3,x4).
  const Monomial x1 = Monomial::variable(4, 0);
  EXPECT_EQ(fam.b_basis(x1).size(), 1u);
  EXPECT_EQ(fam.a_basis(x1).size(), 1u);
  // 1 survives in both, A_0 = k.
  EXPECT_EQ(fam.b_basis(Monomial::one(4)).size(), 2u);
  EXPECT_EQ(fam.a_basis(Monomial::one(4)).size(), 1u);
  EXPECT_TRUE(fam.in_A(fam.diagonal(x1)));
  EXPECT_FALSE(fam.in_A(fam.unit(0)));
}

TEST(Pullback, RejectsComparableSupports) {
  const auto ctx = VarContext::indexed(3);
  EXPECT_THROW(PullbackFamily::intersection(ctx, {set({1}), set({1, 2})}), InvalidInput);
  EXPECT_THROW(PullbackFamily::intersection(ctx, {}), InvalidInput);
}

TEST(Pullback, ConductorMatchesOracleOnRandomFamilies) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 3 + rng() % 3;
    std::vector<VarMask> supports;
    for (int tries = 0; supports.size() < 3; ++tries) {
      if (tries % 20 == 0) supports.clear();  // a greedy choice can leave no room for a third set
      const VarMask s = 1 + rng() % ((VarMask{1} << n) - 1);
      bool ok = true;
      for (VarMask o : supports) ok = ok && (s & ~o) != 0 && (o & ~s) != 0;
      if (ok) supports.push_back(s);
    }
    const auto ctx = VarContext::indexed(n);
    const PullbackFamily fam = PullbackFamily::intersection(ctx, supports);
    const Conductor cond = conductor(fam);
    const MonomialIdeal lifted = cond.ideal + fam.defining_ideal();
    const std::vector<std::uint64_t> sup(supports.begin(), supports.end());
    for (const auto& u : or_::box(n, 2)) {
      ASSERT_EQ(lifted.contains(Monomial(u)), or_::in_f_family_conductor(sup, u));
    }
  }
}

TEST(Pullback, TwoPlanesConductorIsMaximal) {
  const auto ctx = VarContext::indexed(4);
  const PullbackFamily fam = PullbackFamily::intersection(ctx, {set({1, 2}), set({3, 4})});
  const Conductor cond = conductor(fam);
  EXPECT_EQ(cond.ideal + fam.defining_ideal(), MonomialIdeal::maximal(ctx));
  const CokernelProfile prof = cokernel_profile(fam);
  EXPECT_EQ(prof.length, 1u);
  EXPECT_EQ(prof.socle_dim, 1u);
  EXPECT_TRUE(prof.conductor_annihilates);
}

TEST(Pullback, DegreeSixFamilyCokernel) {
  const auto ctx = VarContext::indexed(6);
  const PullbackFamily fam =
      PullbackFamily::intersection(ctx, {set({1, 2, 3, 4}), set({3, 4, 5, 6}), set({5, 6, 1, 2})});
  const Conductor cond = conductor(fam);
  EXPECT_EQ(cond.ideal + fam.defining_ideal(), MonomialIdeal::maximal(ctx));
  const CokernelProfile prof = cokernel_profile(fam);
  EXPECT_EQ(prof.length, 2u);
  EXPECT_EQ(prof.socle_dim, 2u);
  EXPECT_EQ(prof.hilbert, (std::vector<std::size_t>{2, 0}));
  const Polynomial a = Polynomial::linear_form(6, {0, 2, 4});
  const Polynomial b = Polynomial::linear_form(6, {1, 3, 5});
  EXPECT_TRUE(verify_generation(fam, cond, {a, b}));
  EXPECT_FALSE(verify_generation(fam, cond, {a}));
  EXPECT_TRUE(regular_on_B(fam, {a, b}, 6));
}

TEST(Pullback, FiberProductCokernelIsSModQ) {
  const auto ctx = VarContext::indexed(2);
  for (const MonomialIdeal& q : {make(ctx, {{2, 0}, {0, 1}}), make(ctx, {{2, 0}, {1, 1}, {0, 2}}),
                                 make(ctx, {{3, 0}, {0, 2}})}) {
    const PullbackFamily fam = PullbackFamily::congruence(q);
    const Conductor cond = conductor(fam);
    EXPECT_EQ(cond.shape, ConductorShape::IdealTimesB);
    EXPECT_EQ(cond.ideal, q);
    EXPECT_EQ(cokernel_profile(fam).length, colength(q, 4)) << q.to_string();
  }
}

TEST(Pullback, ConstantsPlusIdeal) {
  const auto ctx = VarContext::indexed(2);
  const MonomialIdeal q = make(ctx, {{2, 0}, {0, 1}});
  const PullbackFamily fam = PullbackFamily::constants_plus_ideal(q);
  EXPECT_FALSE(fam.has_full_diagonal());
  EXPECT_EQ(conductor(fam).ideal, q);
  EXPECT_EQ(cokernel_profile(fam).length, colength(q, 4) - 1);
  EXPECT_THROW(PullbackFamily::constants_plus_ideal(make(ctx, {{2, 0}})), InvalidInput);
}

TEST(Pullback, ImageMembershipWitness) {
  const auto ctx = VarContext::indexed(4);
  const PullbackFamily fam = PullbackFamily::intersection(ctx, {set({1, 2}), set({3, 4})});
  const Polynomial f = Polynomial::linear_form(4, {0, 2});
  const Membership m = image_membership(fam, fam.diagonal(f));
  ASSERT_TRUE(m.member);
  ASSERT_TRUE(m.witness.has_value());
  EXPECT_EQ(fam.diagonal(*m.witness), fam.diagonal(f));
  EXPECT_FALSE(image_membership(fam, fam.unit(1)).member);
}

TEST(Pullback, ColonOfConductorIsB) {
  const auto ctx = VarContext::indexed(4);
  const PullbackFamily fam = PullbackFamily::intersection(ctx, {set({1, 2}), set({3, 4})});
  const MonomialIdeal m = MonomialIdeal::maximal(ctx);
  const ColonResult endo = colon_in_B(fam, GradedSubmodule::ideal_of_A(fam, m), m, 4);
  EXPECT_TRUE(endo.is_all_of_B());
  const ColonResult ring = colon_in_B(fam, GradedSubmodule::ring_A(fam), m, 4);
  EXPECT_TRUE(ring.same_as(endo));
}

TEST(Pullback, ExponentCapsCoverGenerators) {
  const auto ctx = VarContext::indexed(2);
  const PullbackFamily fam = PullbackFamily::congruence(make(ctx, {{3, 0}, {0, 2}}));
  EXPECT_EQ(fam.exponent_caps(), (std::vector<std::uint32_t>{3, 2}));
  EXPECT_EQ(monomials_in_box({1, 2}).size(), 6u);
}
