#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "commalg/errors.hpp"
#include "commalg/oracles/oracles.hpp"
#include "commalg/semigroup.hpp"

using namespace commalg;

namespace {

Series t(const std::string& text, const FieldSpec& f = FieldSpec::rationals()) { return parse_series(text, f); }

const Claim& claim(const VerificationReport& r, const std::string& id) {
  const Claim* c = r.find(id);
  if (c == nullptr) throw std::runtime_error("missing claim " + id);
  return *c;
}

}  // namespace

TEST(Semigroup, GapsAgreeWithClosureOracle) {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::uint32_t> gens;
    std::uint32_t g = 0;
    while (g != 1) {
      gens.clear();
      g = 0;
      for (int k = 0, c = 2 + static_cast<int>(rng() % 3); k < c; ++k) {
        gens.push_back(2 + rng() % 12);
        g = std::gcd(g, gens.back());
      }
    }
    const NumericalSemigroup h(gens);
    EXPECT_EQ(h.gaps(), oracles::semigroup_gaps(gens, 200));
  }
}

TEST(Semigroup, TwoGeneratorFrobenius) {
  for (std::uint32_t a = 2; a < 12; ++a) {
    for (std::uint32_t b = a + 1; b < 15; ++b) {
      if (std::gcd(a, b) != 1) continue;
      const NumericalSemigroup h({a, b});
      EXPECT_EQ(h.frobenius(), static_cast<std::int64_t>(a * b - a - b));
      EXPECT_TRUE(h.is_symmetric());
      EXPECT_TRUE(h.is_symmetric_direct());
    }
  }
}

TEST(Semigroup, ThreeFourAndThreeFourFive) {
  const NumericalSemigroup h({3, 4});
  EXPECT_EQ(h.gaps(), (std::vector<std::uint32_t>{1, 2, 5}));
  EXPECT_EQ(h.conductor(), 6u);
  EXPECT_EQ(h.apery(3), (std::vector<std::uint32_t>{0, 4, 8}));
  const NumericalSemigroup k({3, 4, 5, 8});
  EXPECT_EQ(k.generators(), (std::vector<std::uint32_t>{3, 4, 5}));
  EXPECT_FALSE(k.is_symmetric());
  EXPECT_FALSE(k.is_symmetric_direct());
  EXPECT_EQ(NumericalSemigroup({1}).frobenius(), -1);
  EXPECT_THROW(NumericalSemigroup({4, 6}), InvalidInput);
}

TEST(Series, ParseAndMultiply) {
  const ScalarField q(FieldSpec::rationals());
  const Series a = t("t^2+t^3");
  EXPECT_EQ(series_to_string(truncated_product(q, a, a, 6)), "t^4 + 2*t^5");
  const ScalarField f2(FieldSpec::prime(2));
  const Series b = t("t^2+t^3", FieldSpec::prime(2));
  EXPECT_EQ(series_to_string(truncated_product(f2, b, b, 10)), "t^4 + t^6");
  EXPECT_THROW(t("t^"), InvalidInput);
}

TEST(Subalgebra, MonomialGeneratorsGiveTheirSemigroup) {
  for (const auto& gens : std::vector<std::vector<std::uint32_t>>{{2, 3}, {3, 4}, {3, 5, 7}, {4, 5, 6}}) {
    std::vector<Series> series;
    for (auto g : gens) series.push_back(t("t^" + std::to_string(g)));
    const TruncatedSubalgebra p = TruncatedSubalgebra::closure(series, FieldSpec::rationals(), 50);
    const NumericalSemigroup h(gens);
    EXPECT_EQ(p.value_semigroup().generators(), h.generators());
    EXPECT_EQ(p.conductor_exponent(), h.conductor());
  }
}

TEST(Subalgebra, CharacteristicChangesTheClosure) {
  const std::vector<std::string> gens = {"t^2+t^3", "t^4", "t^6"};
  for (const FieldSpec& f : {FieldSpec::rationals(), FieldSpec::prime(2)}) {
    std::vector<Series> s;
    for (const auto& g : gens) s.push_back(t(g, f));
    const TruncatedSubalgebra p = TruncatedSubalgebra::closure(s, f);
    const auto values = p.valuations();
    EXPECT_FALSE(values.count(3));
    if (f.is_rational()) {
      // (t^2+t^3)^2 - t^4 = 2t^5 + t^6
      EXPECT_TRUE(values.count(5));
      EXPECT_FALSE(p.contains_power(3));
    } else {
      EXPECT_FALSE(values.count(5));
      EXPECT_TRUE(p.contains_power(7));
    }
  }
}

TEST(Subalgebra, ShortWindowIsReported) {
  const TruncatedSubalgebra p = TruncatedSubalgebra::closure({t("t^7"), t("t^9")}, FieldSpec::rationals(), 30);
  EXPECT_THROW(p.conductor_exponent(), PrecisionExhausted);
  EXPECT_THROW(TruncatedSubalgebra::closure({t("t^9")}, FieldSpec::rationals(), 20), InvalidInput);
}

TEST(Subalgebra, Reports) {
  const VerificationReport cone = cone_extension_report({t("t^3"), t("t^4")}, FieldSpec::rationals());
  EXPECT_EQ(claim(cone, "conductor_exponent").computed, 6);
  EXPECT_EQ(claim(cone, "conductor_equals_c_plus_sB").computed, true);
  const VerificationReport quad = quadratic_extension_report({FieldSpec::rationals(), 0, -1});
  EXPECT_TRUE(quad.ok());
  EXPECT_EQ(claim(quad, "dim_V_over_P").computed, 1);
  EXPECT_THROW(quadratic_extension_report({FieldSpec::rationals(), 0, 4}), InvalidInput);
  EXPECT_THROW(quadratic_extension_report({FieldSpec::prime(5), 0, 4}), InvalidInput);
}
