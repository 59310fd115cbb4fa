#include "logdist/serialize.hpp"

#include <random>

#include <gtest/gtest.h>

#include "logdist/verify.hpp"

namespace logdist {
namespace {

TEST(SerializeTest, RationalFormat) {
  EXPECT_EQ(rational_to_json(Rational(-4, 6)), json("-2/3"));
  EXPECT_EQ(rational_to_json(Rational(5)), json("5"));
  EXPECT_EQ(rational_from_json(json("10/4")), Rational(5, 2));
  EXPECT_EQ(rational_from_json(json(7)), Rational(7));
  EXPECT_THROW(rational_from_json(json(0.5)), std::invalid_argument);
  EXPECT_THROW(rational_from_json(json("1/0")), std::invalid_argument);
}

TEST(SerializeTest, QuadElemShape) {
  const HeckeData ctx = HeckeData::make(3, 0, 1);
  const json j = quad_to_json(QuadElem(Rational(1, 2), Rational(-3), ctx.ring()));
  EXPECT_EQ(j, json({{"c0", "1/2"}, {"c1", "-3"}}));
}

TEST(SerializeTest, ContextRoundTripAndValidation) {
  const HeckeData ctx = HeckeData::make(5, -2, -1, 7);
  const HeckeData back = ctx_from_json(ctx_to_json(ctx));
  EXPECT_EQ(back.p, 5);
  EXPECT_EQ(back.ap, -2);
  EXPECT_EQ(back.eps, -1);
  EXPECT_EQ(back.n_max, 7);
  EXPECT_EQ(ctx_from_json(json({{"p", 3}, {"ap", 0}, {"eps", 1}})).n_max, 12);
  EXPECT_THROW(ctx_from_json(json({{"p", 4}, {"ap", 0}, {"eps", 1}})), std::invalid_argument);
}

TEST(SerializeTest, RandomRoundTrips) {
  std::mt19937_64 rng(3);
  for (const HeckeData ctx : {HeckeData::make(3, 0, 1), HeckeData::make(2, 1, -1), HeckeData::make(5, 5, -1)}) {
    const QuadRing ring = ctx.ring();
    for (int t = 0; t < 50; ++t) {
      QuadMat2 m;
      m << random_quad(rng, ring), random_quad(rng, ring), random_quad(rng, ring), random_quad(rng, ring);
      const json encoded = matrix_to_json(m);
      ASSERT_EQ(matrix_from_json(encoded, ring), m);
      ASSERT_EQ(matrix_from_json(json::parse(encoded.dump()), ring), m);

      std::vector<QuadElem> c(static_cast<std::size_t>(t % 9) + 1);
      for (std::size_t i = 0; i < c.size(); i += 2) c[i] = random_quad(rng, ring);
      const PolyQ f(std::move(c));
      ASSERT_EQ(poly_from_json(json::parse(poly_to_json(f).dump()), ring), f);
    }
  }
}

TEST(SerializeTest, MalformedInputRejected) {
  const QuadRing ring{0, 3};
  EXPECT_THROW(matrix_from_json(json::array({json::array()}), ring), std::invalid_argument);
  EXPECT_THROW(poly_from_json(json::array(), ring), std::invalid_argument);
  EXPECT_THROW(poly_from_json(json({{"-1", {{"c0", "1"}, {"c1", "0"}}}}), ring), std::invalid_argument);
}

TEST(SerializeTest, DistributionRecord) {
  const HeckeData ctx = HeckeData::make(5, 1, 1);
  const json j = distribution_to_json(mu(ctx, 3, 2));
  for (const char* key : {"ctx", "b", "n", "digits", "runs", "matrix", "flags"}) EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j.at("digits"), json({3, 0}));
  EXPECT_EQ(j.at("runs"), json({0, 1}));
  EXPECT_EQ(j.at("flags"), json({"ordinary:first-column-certified"}));
  EXPECT_EQ(matrix_from_json(j.at("matrix"), ctx.ring()), mu(ctx, 3, 2).matrix);
}

TEST(SerializeTest, TwoVariableShapes) {
  const HeckeData a = HeckeData::make(3, 0, 1);
  const HeckeData b = HeckeData::make(3, 3, -1);
  const json same = two_variable_to_json(mu_two_variable(a, 0, 1, a, 0, 1));
  ASSERT_EQ(same.size(), 4u);
  EXPECT_TRUE(same[0][0].contains("c0"));
  const json mixed = two_variable_to_json(mu_two_variable(a, 0, 1, b, 0, 1));
  ASSERT_EQ(mixed.size(), 4u);
  for (const char* key : {"1", "a1", "a2", "a1a2"}) EXPECT_TRUE(mixed[0][0].contains(key)) << key;
}

}  // namespace
}  // namespace logdist
