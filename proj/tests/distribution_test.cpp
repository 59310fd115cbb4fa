#include "logdist/distribution.hpp"

#include <algorithm>

#include <gtest/gtest.h>

namespace logdist {
namespace {

QuadElem q(const Rational& c0, const Rational& c1, const HeckeData& ctx) { return QuadElem(c0, c1, ctx.ring()); }

Rational r(long num, long den) { return Rational(num, den); }

bool has_flag(const DistributionValue& v, const std::string& flag) {
  const auto f = v.flags();
  return std::find(f.begin(), f.end(), flag) != f.end();
}

TEST(DigitsTest, Examples) {
  EXPECT_EQ(digits(4, 2, 3).digits, (std::vector<int>{1, 1}));
  EXPECT_EQ(digits(0, 3, 5).digits, (std::vector<int>{0, 0, 0}));
  EXPECT_EQ(digits(10, 2, 3).digits, (std::vector<int>{1, 0}));
  EXPECT_EQ(digits(10, 2, 3).b, 1);
  const DigitString neg = digits(-1, 3, 2);
  EXPECT_EQ(neg.b, 7);
  EXPECT_EQ(neg.digits, (std::vector<int>{1, 1, 1}));
  EXPECT_THROW(digits(1, 0, 3), std::invalid_argument);
  EXPECT_THROW(digits(1, 2, 4), std::invalid_argument);
}

TEST(RunStructureTest, Examples) {
  EXPECT_EQ(run_structure(digits(9, 4, 3)).zero_runs, (std::vector<int>{2, 1}));
  const RunStructure adjacent = run_structure(digits(4, 2, 3));
  EXPECT_EQ(adjacent.zero_runs, (std::vector<int>{0, 0, 0}));
  EXPECT_EQ(adjacent.nonzero_count(), 2);
  EXPECT_EQ(run_structure(digits(0, 3, 3)).zero_runs, (std::vector<int>{3}));
}

TEST(ChromaticTest, Examples) {
  const HeckeData ctx = HeckeData::make(5, 2, -1);
  EXPECT_EQ(chromatic(0, ctx), mat2<QuadElem>(2, 1, 1, 0));
  for (int d = 1; d < 5; ++d) EXPECT_EQ(chromatic(d, ctx), mat2<QuadElem>(0, 0, 1, 0));
  EXPECT_THROW(chromatic(5, ctx), std::out_of_range);
  EXPECT_THROW(chromatic(-1, ctx), std::out_of_range);
}

TEST(MuTest, IndependentOracleValues) {
  {
    const HeckeData ctx = HeckeData::make(3, 1, -1);
    const QuadMat2 expected =
        mat2<QuadElem>(q(r(-19, 81), r(7, 81), ctx), q(r(-4, 27), r(-7, 81), ctx), 0, 0);
    EXPECT_EQ(mu(ctx, 3, 2).matrix, expected);
  }
  {
    const HeckeData ctx = HeckeData::make(2, 2, 1);
    const QuadMat2 expected =
        mat2<QuadElem>(0, 0, q(r(-3, 8), r(1, 8), ctx), q(r(-1, 8), r(-1, 8), ctx));
    EXPECT_EQ(mu(ctx, 1, 3).matrix, expected);
  }
  {
    const HeckeData ctx = HeckeData::make(5, -1, 1);
    const QuadMat2 expected =
        mat2<QuadElem>(q(r(11, 625), r(-9, 625), ctx), q(r(4, 125), r(9, 625), ctx), 0, 0);
    EXPECT_EQ(mu(ctx, 10, 2).matrix, expected);
  }
  {
    const HeckeData ctx = HeckeData::make(3, 3, -1);
    const QuadMat2 expected = mat2<QuadElem>(q(r(26, 9), r(-7, 9), ctx), q(r(5, 9), r(7, 9), ctx),
                                             q(r(5, 3), r(-4, 9), ctx), q(r(1, 3), r(4, 9), ctx));
    EXPECT_EQ(mu(ctx, 0, 2).matrix, expected);
  }
  {
    const HeckeData ctx = HeckeData::make(2, 0, 1);
    const QuadMat2 expected =
        mat2<QuadElem>(q(0, r(-1, 4), ctx), q(0, r(1, 4), ctx), QuadElem(r(1, 4)), QuadElem(r(1, 4)));
    EXPECT_EQ(mu(ctx, 0, 1).matrix, expected);
  }
}

TEST(MuTest, ConsecutiveNonzeroDigitsVanish) {
  const DistributionValue a = mu(HeckeData::make(3, 1, -1), 5, 2);
  const DistributionValue b = mu(HeckeData::make(2, 2, 1), 3, 3);
  const DistributionValue c = mu(HeckeData::make(5, -1, 1), 7, 2);
  for (const auto* v : {&a, &b, &c}) {
    EXPECT_TRUE(is_zero_matrix(v->matrix));
    EXPECT_TRUE(has_flag(*v, "zero:consecutive-nonzero-digits"));
    EXPECT_TRUE(has_flag(*v, "zero-matrix"));
  }
}

TEST(MuTest, SeparatedDigitsGiveSecondRowOfRoot) {
  // b = 10 has digits (1, 0, 1): Y_1·Y_0·Y_1 = [[0,0],[ε²,0]] picks the first row of R_3 into row two.
  const HeckeData ctx = HeckeData::make(3, 0, 1);
  const QuadElem a = alpha(ctx);
  const QuadMat2 expected = mat2<QuadElem>(0, 0, a / Rational(27), -a / Rational(27));
  EXPECT_EQ(mu(ctx, 10, 3).matrix, expected);
  const QuadMat2 r3 = root_matrix(ctx, 3);
  EXPECT_EQ(expected, mat2<QuadElem>(0, 0, r3(0, 0), r3(0, 1)));
}

TEST(MuTest, Flags) {
  const DistributionValue ordinary = mu(HeckeData::make(5, 1, 1), 3, 2);
  EXPECT_TRUE(ordinary.first_column_only());
  EXPECT_TRUE(has_flag(ordinary, "ordinary:first-column-certified"));
  EXPECT_FALSE(has_flag(ordinary, "zero-matrix"));
  const DistributionValue ss = mu(HeckeData::make(3, 0, 1), 0, 2);
  EXPECT_TRUE(ss.flags().empty());
}

TEST(MuTest, DepthRange) {
  const HeckeData ctx = HeckeData::make(3, 0, 1, 6);
  EXPECT_THROW(mu(ctx, 0, 0), std::out_of_range);
  EXPECT_THROW(mu(ctx, 0, 7), std::out_of_range);
  EXPECT_EQ(mu(ctx, -1, 2).b, 8);
}

class MuGrid : public ::testing::TestWithParam<std::tuple<long, long, int>> {};

TEST_P(MuGrid, Additivity) {
  const auto [p, ap, eps] = GetParam();
  const HeckeData ctx = HeckeData::make(p, ap, eps);
  const int top = p == 5 ? 3 : 4;
  for (int n = 1; n < top; ++n) {
    const std::int64_t pn = int_pow(p, n);
    for (std::int64_t b = 0; b < pn; ++b) {
      QuadMat2 sum = QuadMat2::Zero();
      for (std::int64_t j = 0; j < p; ++j) sum += mu(ctx, b + j * pn, n + 1).matrix;
      ASSERT_EQ(sum, mu(ctx, b, n).matrix) << "b=" << b << " n=" << n;
    }
  }
  // Total mass at depth 1 is Log evaluated at x = 1.
  QuadMat2 total = QuadMat2::Zero();
  for (std::int64_t b = 0; b < p; ++b) total += mu(ctx, b, 1).matrix;
  const int e = p == 2 ? 3 : 2;
  EXPECT_EQ(total, power(companion_inverse(ctx), e) * mat2<QuadElem>(-1, -1, beta(ctx), alpha(ctx)));
}

TEST_P(MuGrid, VanishingAndColumnSwap) {
  const auto [p, ap, eps] = GetParam();
  const HeckeData ctx = HeckeData::make(p, ap, eps);
  const int n = p == 5 ? 3 : 4;
  for (std::int64_t b = 0; b < int_pow(p, n); ++b) {
    const DistributionValue v = mu(ctx, b, n);
    const DigitString d = digits(b, n, p);
    bool adjacent = false;
    for (int i = 0; i + 1 < n; ++i) adjacent = adjacent || (d.digits[i] != 0 && d.digits[i + 1] != 0);
    if (adjacent) ASSERT_TRUE(is_zero_matrix(v.matrix)) << "b=" << b;
    QuadMat2 swapped = v.matrix;
    swapped.col(0).swap(swapped.col(1));
    ASSERT_EQ(conj(v.matrix), swapped) << "b=" << b;
  }
}

INSTANTIATE_TEST_SUITE_P(Contexts, MuGrid,
                         ::testing::Values(std::make_tuple(2L, 0L, 1), std::make_tuple(2L, -2L, -1),
                                           std::make_tuple(3L, 0L, -1), std::make_tuple(3L, 1L, 1),
                                           std::make_tuple(5L, 5L, 1), std::make_tuple(5L, 2L, -1)));

TEST(MuTest, ZeroTraceParity) {
  // With a_p = 0 the value vanishes unless all nonzero digits sit at positions of one parity.
  for (const HeckeData ctx : {HeckeData::make(3, 0, 1), HeckeData::make(2, 0, -1)}) {
    const int n = 5;
    for (std::int64_t b = 0; b < int_pow(ctx.p, n); ++b) {
      const DigitString d = digits(b, n, ctx.p);
      bool even = false;
      bool odd = false;
      for (int i = 0; i < n; ++i) {
        if (d.digits[i] == 0) continue;
        (i % 2 == 0 ? even : odd) = true;
      }
      if (even && odd) ASSERT_TRUE(is_zero_matrix(mu(ctx, b, n).matrix)) << describe(ctx) << " b=" << b;
    }
  }
  EXPECT_TRUE(is_zero_matrix(mu(HeckeData::make(3, 0, 1), 28, 4).matrix));
  EXPECT_FALSE(is_zero_matrix(mu(HeckeData::make(3, 0, 1), 10, 4).matrix));
}

TEST(TwoVariableTest, SameRingIsKroneckerProduct) {
  const HeckeData ctx = HeckeData::make(3, 0, 1);
  const TwoVariableMatrix m = mu_two_variable(ctx, 0, 1, ctx, 1, 1);
  ASSERT_TRUE(std::holds_alternative<Mat4<QuadElem>>(m));
  const Mat4<QuadElem>& k = std::get<Mat4<QuadElem>>(m);
  const QuadMat2 a = mu(ctx, 0, 1).matrix;
  const QuadMat2 b = mu(ctx, 1, 1).matrix;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int s = 0; s < 2; ++s)
        for (int t = 0; t < 2; ++t) EXPECT_EQ(k(2 * i + s, 2 * j + t), a(i, j) * b(s, t));
}

TEST(TwoVariableTest, ZeroFactorGivesZero) {
  const HeckeData ctx = HeckeData::make(3, 0, 1);
  EXPECT_TRUE(is_zero_matrix(mu_two_variable(ctx, 4, 2, ctx, 1, 2)));
  EXPECT_TRUE(is_zero_matrix(mu_two_variable(ctx, 1, 2, HeckeData::make(3, 3, -1), 4, 2)));
  EXPECT_FALSE(is_zero_matrix(mu_two_variable(ctx, 1, 2, ctx, 3, 2)));
}

TEST(TwoVariableTest, AdditiveInEachVariable) {
  for (const HeckeData ctx2 : {HeckeData::make(3, 0, 1), HeckeData::make(3, 3, -1)}) {
    const HeckeData ctx1 = HeckeData::make(3, 0, 1);
    for (int n1 = 1; n1 <= 2; ++n1) {
      for (std::int64_t b1 = 0; b1 < int_pow(3, n1); ++b1) {
        for (std::int64_t b2 = 0; b2 < 9; ++b2) {
          const TwoVariableMatrix whole = mu_two_variable(ctx1, b1, n1, ctx2, b2, 2);
          TwoVariableMatrix first = mu_two_variable(ctx1, b1, n1 + 1, ctx2, b2, 2);
          TwoVariableMatrix second = mu_two_variable(ctx1, b1, n1, ctx2, b2, 3);
          for (std::int64_t j = 1; j < 3; ++j) {
            first = first + mu_two_variable(ctx1, b1 + j * int_pow(3, n1), n1 + 1, ctx2, b2, 2);
            second = second + mu_two_variable(ctx1, b1, n1, ctx2, b2 + j * 9, 3);
          }
          ASSERT_TRUE(whole == first);
          ASSERT_TRUE(whole == second);
        }
      }
    }
  }
}

TEST(TwoVariableTest, DifferentRingsUseTensorEntries) {
  const HeckeData ctx1 = HeckeData::make(3, 0, 1);
  const HeckeData ctx2 = HeckeData::make(3, 3, -1);
  const TwoVariableMatrix m = mu_two_variable(ctx1, 0, 1, ctx2, 0, 1);
  ASSERT_TRUE(std::holds_alternative<Mat4<TensorElem>>(m));
  const Mat4<TensorElem>& k = std::get<Mat4<TensorElem>>(m);
  const QuadMat2 a = mu(ctx1, 0, 1).matrix;
  const QuadMat2 b = mu(ctx2, 0, 1).matrix;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int s = 0; s < 2; ++s)
        for (int t = 0; t < 2; ++t) EXPECT_EQ(k(2 * i + s, 2 * j + t), TensorElem::tensor(a(i, j), b(s, t)));
  // (α₁ ⊗ α₂)² = α₁² ⊗ α₂².
  const TensorElem x = TensorElem::tensor(alpha(ctx1), alpha(ctx2));
  EXPECT_EQ(x * x, TensorElem::tensor(alpha(ctx1) * alpha(ctx1), alpha(ctx2) * alpha(ctx2)));
}

TEST(TwoVariableTest, OrdinaryContextRejected) {
  EXPECT_THROW(mu_two_variable(HeckeData::make(5, 1, 1), 0, 1, HeckeData::make(5, 0, 1), 0, 1),
               std::domain_error);
}

}  // namespace
}  // namespace logdist
