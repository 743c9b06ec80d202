#include <random>

#include <gtest/gtest.h>

#include "commalg/simplicial.hpp"

using namespace commalg;

namespace {

VarMask set(std::initializer_list<int> vs) {
  VarMask m = 0;
  for (int v : vs) m |= VarMask{1} << (v - 1);
  return m;
}

SimplicialComplex projective_plane() {
  return SimplicialComplex(VarContext::indexed(6),
                           {set({1, 2, 3}), set({1, 3, 4}), set({1, 4, 5}), set({1, 5, 6}), set({1, 2, 6}),
                            set({2, 3, 5}), set({3, 4, 6}), set({2, 4, 5}), set({2, 4, 6}), set({3, 5, 6})});
}

SimplicialComplex boundary_of_simplex(std::size_t n) {
  std::vector<VarMask> faces;
  for (std::size_t v = 0; v < n; ++v) faces.push_back(full_mask(n) & ~(VarMask{1} << v));
  return SimplicialComplex(VarContext::indexed(n), faces);
}

std::vector<std::size_t> ranks(const SimplicialComplex& c, const FieldSpec& f) { return reduced_homology(c, f).ranks; }

}  // namespace

TEST(Simplicial, FacetsAreMaximal) {
  const SimplicialComplex c(VarContext::indexed(3), {set({1}), set({1, 2}), set({3})});
  EXPECT_EQ(c.facets().size(), 2u);
  EXPECT_EQ(c.dimension(), 1);
  EXPECT_FALSE(c.is_pure());
  EXPECT_EQ(c.f_vector(), (std::vector<std::size_t>{1, 3, 1}));
}

TEST(Simplicial, StanleyReisnerRoundTrip) {
  const SimplicialComplex rp2 = projective_plane();
  const MonomialIdeal i = ideal_of(rp2);
  EXPECT_TRUE(i.is_squarefree());
  EXPECT_EQ(complex_of(i), rp2);
  // The 6-vertex projective plane has all 15 edges, so its non-faces are the 10 missing triangles.
  EXPECT_EQ(i.generators().size(), 10u);
}

TEST(Simplicial, SphereHomology) {
  for (std::size_t n = 2; n <= 6; ++n) {
    std::vector<std::size_t> expected(n, 0);
    expected.back() = 1;
    EXPECT_EQ(ranks(boundary_of_simplex(n), FieldSpec::rationals()), expected);
  }
  EXPECT_EQ(ranks(SimplicialComplex::irrelevant(VarContext::indexed(2)), FieldSpec::rationals()),
            (std::vector<std::size_t>{1}));
}

TEST(Simplicial, ProjectivePlaneDependsOnCharacteristic) {
  const SimplicialComplex rp2 = projective_plane();
  EXPECT_EQ(ranks(rp2, FieldSpec::rationals()), (std::vector<std::size_t>{0, 0, 0, 0}));
  EXPECT_EQ(ranks(rp2, FieldSpec::prime(2)), (std::vector<std::size_t>{0, 0, 1, 1}));
  EXPECT_EQ(ranks(rp2, FieldSpec::prime(3)), (std::vector<std::size_t>{0, 0, 0, 0}));
  EXPECT_TRUE(is_cohen_macaulay(rp2, FieldSpec::rationals()));
  EXPECT_FALSE(is_cohen_macaulay(rp2, FieldSpec::prime(2)));
  EXPECT_EQ(depth(ideal_of(rp2), FieldSpec::rationals()), 3);
  EXPECT_EQ(depth(ideal_of(rp2), FieldSpec::prime(2)), 2);
}

TEST(Simplicial, EulerCharacteristicMatchesFaceCounts) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 3 + rng() % 5;
    std::vector<VarMask> faces;
    for (int k = 0; k < 4; ++k) faces.push_back(1 + rng() % ((VarMask{1} << n) - 1));
    const SimplicialComplex c(VarContext::indexed(n), faces);
    const auto f = c.f_vector();
    int alternating = 0;
    for (std::size_t k = 0; k < f.size(); ++k) alternating += (k % 2 == 0 ? -1 : 1) * static_cast<int>(f[k]);
    EXPECT_EQ(reduced_homology(c, FieldSpec::rationals()).euler_characteristic(), alternating);
  }
}

TEST(Simplicial, BettiNumbersOfPath) {
  // (x1 x2, x2 x3): 0 <- T <- T^2 <- T <- 0
  const auto ctx = VarContext::indexed(3);
  const MonomialIdeal i(ctx, {Monomial::from_mask(3, set({1, 2})), Monomial::from_mask(3, set({2, 3}))});
  const BettiTable b = graded_betti(i, FieldSpec::rationals());
  EXPECT_EQ(b.total(0), 2u);
  EXPECT_EQ(b.total(1), 1u);
  EXPECT_EQ(b.at(1, set({1, 2, 3})), 1u);
  EXPECT_EQ(b.projective_dimension_of_quotient(), 2);
  EXPECT_EQ(depth(i, FieldSpec::rationals()), 1);
}

TEST(Simplicial, DepthRoutesAgreeAndSatisfyAuslanderBuchsbaum) {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 2 + rng() % 5;
    std::vector<Monomial> gens;
    for (int k = 0, c = 1 + static_cast<int>(rng() % 4); k < c; ++k) {
      gens.push_back(Monomial::from_mask(n, 1 + rng() % ((VarMask{1} << n) - 1)));
    }
    const MonomialIdeal i(VarContext::indexed(n), gens);
    for (const FieldSpec& f : {FieldSpec::rationals(), FieldSpec::prime(2)}) {
      const int pd = graded_betti(i, f).projective_dimension_of_quotient();
      const int d = depth_from_links(complex_of(i), f);
      EXPECT_EQ(d + pd, static_cast<int>(n)) << i.to_string();
      EXPECT_EQ(depth(i, f), d);
    }
  }
}

TEST(Simplicial, CohenMacaulayExamples) {
  EXPECT_TRUE(is_cohen_macaulay(boundary_of_simplex(4), FieldSpec::rationals()));
  // Two disjoint edges: disconnected of dimension 1.
  const SimplicialComplex two_edges(VarContext::indexed(4), {set({1, 2}), set({3, 4})});
  EXPECT_FALSE(is_cohen_macaulay(two_edges, FieldSpec::rationals()));
  EXPECT_EQ(depth_from_links(two_edges, FieldSpec::rationals()), 1);
}

TEST(Simplicial, NonSquarefreeDepthThroughPolarization) {
  const auto ctx = VarContext::indexed(2);
  // k[x,y]/(x^2, xy) has depth 0 (x is a socle element).
  const MonomialIdeal i(ctx, {Monomial({2, 0}), Monomial({1, 1})});
  EXPECT_EQ(depth(i, FieldSpec::rationals()), 0);
  const MonomialIdeal j(ctx, {Monomial({2, 0})});
  EXPECT_EQ(depth(j, FieldSpec::rationals()), 1);
}

TEST(Simplicial, LinkAndRestriction) {
  const SimplicialComplex rp2 = projective_plane();
  const SimplicialComplex lk = rp2.link(set({1}));
  // Link of a vertex in a triangulated surface is a cycle: five edges here.
  EXPECT_EQ(lk.facets().size(), 5u);
  EXPECT_EQ(ranks(lk, FieldSpec::rationals()), (std::vector<std::size_t>{0, 0, 1}));
  EXPECT_EQ(rp2.restriction(set({1, 2, 3})).facets().size(), 1u);
}

TEST(Simplicial, JsonRoundTrip) {
  const SimplicialComplex rp2 = projective_plane();
  EXPECT_EQ(complex_from_json(complex_to_json(rp2)), rp2);
}
