#include "logdist/logmatrix.hpp"

#include <random>

#include <gtest/gtest.h>

#include "logdist/verify.hpp"

namespace logdist {
namespace {

PolyQ poly(std::initializer_list<long> c) {
  std::vector<QuadElem> v;
  for (long x : c) v.emplace_back(x);
  return PolyQ(std::move(v));
}

TEST(CyclotomicTest, Examples) {
  EXPECT_EQ(cyclotomic(3, 1), poly({1, 1, 1}));
  EXPECT_EQ(cyclotomic(2, 3), poly({1, 0, 0, 0, 1}));
  EXPECT_EQ(cyclotomic(5, 2).evaluate(QuadElem(1)), QuadElem(5));
  EXPECT_THROW(cyclotomic(3, 0), std::invalid_argument);
  EXPECT_THROW(cyclotomic(6, 1), std::invalid_argument);
  for (std::int64_t p : {2, 3, 5, 7}) {
    for (int n = 1; n <= 3; ++n) EXPECT_EQ(cyclotomic(p, n).degree(), int_pow(p, n) - int_pow(p, n - 1));
  }
}

TEST(LogTruncationTest, SingleFactor) {
  const HeckeData ctx = HeckeData::make(3, 0, 1);
  PolyMat2 factor;
  factor << PolyQ(), PolyQ(1L), -cyclotomic(3, 1), PolyQ();
  const PolyMat2 root = root_matrix(ctx, 1).unaryExpr([](const QuadElem& x) { return PolyQ(x); });
  EXPECT_EQ(log_truncation(ctx, 1), factor * root);
}

TEST(LogTruncationTest, DepthBoundEnforced) {
  const HeckeData ctx = HeckeData::make(3, 0, 1, 4);
  EXPECT_THROW(log_truncation(ctx, 5), std::out_of_range);
  EXPECT_THROW(log_truncation(ctx, 0), std::out_of_range);
}

class LogGrid : public ::testing::TestWithParam<std::tuple<long, long, int>> {};

TEST_P(LogGrid, DegreeBoundAndValueAtOne) {
  const auto [p, ap, eps] = GetParam();
  const HeckeData ctx = HeckeData::make(p, ap, eps);
  // Φ_{p^i}(1) = p collapses every factor to C, leaving C^n·R_n = C^{n−e}·[[−1,−1],[β,α]].
  const int extra = p == 2 ? 3 : 2;
  const QuadMat2 at_one =
      power(companion_inverse(ctx), extra) * mat2<QuadElem>(-1, -1, beta(ctx), alpha(ctx));
  for (int n = 1; n <= (p == 5 ? 3 : 4); ++n) {
    const PolyMat2 log_n = log_truncation(ctx, n);
    for (int i = 0; i < 2; ++i)
      for (int k = 0; k < 2; ++k) EXPECT_LE(log_n(i, k).degree(), int_pow(p, n) - 1);
    EXPECT_EQ(evaluate_at_one(log_n), at_one) << "n=" << n;
  }
}

INSTANTIATE_TEST_SUITE_P(Contexts, LogGrid,
                         ::testing::Values(std::make_tuple(2L, 0L, 1), std::make_tuple(2L, 1L, -1),
                                           std::make_tuple(3L, 0L, 1), std::make_tuple(3L, -3L, -1),
                                           std::make_tuple(3L, 2L, 1), std::make_tuple(5L, 5L, -1)));

TEST(QuotientTest, ReductionExamples) {
  for (std::int64_t p : {2, 3, 5}) {
    for (int k = 1; k <= 3; ++k) {
      const Modulus m = Modulus::cyclotomic(p, k);
      EXPECT_EQ(m.reduce(PolyQ::monomial(QuadElem(1), static_cast<std::size_t>(int_pow(p, k)))), PolyQ(1L));
      for (int i = k + 1; i <= k + 2; ++i) EXPECT_EQ(m.reduce(cyclotomic(p, i)), PolyQ(QuadElem(p)));
      EXPECT_TRUE(m.reduce(cyclotomic(p, k)).is_zero());
    }
  }
  const auto m = std::make_shared<const Modulus>(Modulus::cyclotomic(3, 2));
  const QuadMat2 constant = companion(HeckeData::make(3, 0, 1));
  const PolyMat2 lifted = constant.unaryExpr([](const QuadElem& x) { return PolyQ(x); });
  const Mat2<QuotientElem> reduced = eval_in_quotient(lifted, m);
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k) EXPECT_EQ(reduced(i, k).residue(), lifted(i, k));
}

TEST(QuotientTest, ModulusValidation) {
  EXPECT_THROW(Modulus{PolyQ()}, std::invalid_argument);
  EXPECT_THROW(Modulus(poly({1, 2})), std::invalid_argument);
  EXPECT_THROW(eval_in_quotient(PolyMat2::Identity(), nullptr), std::invalid_argument);
  EXPECT_EQ(Modulus::cyclic(3, 2).degree(), 9);
}

TEST(QuotientTest, GeneralMonicDivision) {
  // x³ + 2x + 1 mod (x² + 1) = x·(x² + 1) + x + 1 → x + 1.
  const Modulus m(poly({1, 0, 1}));
  EXPECT_EQ(m.reduce(poly({1, 2, 0, 1})), poly({1, 1}));
}

TEST(QuotientTest, EvaluationIsRingHomomorphism) {
  std::mt19937_64 rng(11);
  const HeckeData ctx = HeckeData::make(3, 3, -1);
  std::uniform_int_distribution<int> degree(0, 20);
  const auto random_poly = [&] {
    std::vector<QuadElem> c(static_cast<std::size_t>(degree(rng)) + 1);
    for (auto& x : c) x = random_quad(rng, ctx.ring());
    return PolyQ(std::move(c));
  };
  for (const Modulus& raw : {Modulus::cyclotomic(3, 2), Modulus::cyclic(3, 2), Modulus::cyclotomic(2, 3)}) {
    const auto m = std::make_shared<const Modulus>(raw);
    for (int t = 0; t < 10; ++t) {
      PolyMat2 a;
      PolyMat2 b;
      a << random_poly(), random_poly(), random_poly(), random_poly();
      b << random_poly(), random_poly(), random_poly(), random_poly();
      const Mat2<QuotientElem> lhs = eval_in_quotient(a * b, m);
      const Mat2<QuotientElem> rhs = eval_in_quotient(a, m) * eval_in_quotient(b, m);
      EXPECT_EQ(lhs, rhs);
      EXPECT_EQ(eval_in_quotient(a + b, m), eval_in_quotient(a, m) + eval_in_quotient(b, m));
    }
  }
}

TEST(EvaluationLemmaTest, Examples) {
  EXPECT_TRUE(eval_lemma_check(HeckeData::make(3, 0, 1), 1, 2));
  EXPECT_TRUE(eval_lemma_check(HeckeData::make(2, 2, 1), 1, 3));
  EXPECT_TRUE(eval_lemma_check(HeckeData::make(5, 1, -1), 2, 2));
  EXPECT_THROW(eval_lemma_check(HeckeData::make(3, 0, 1), 3, 2), std::out_of_range);
}

TEST(EvaluationLemmaTest, FailsAtDeeperRootsOfUnity) {
  // Log^(2) and Log^(1) agree at ζ_3 but not at primitive 9th roots of unity.
  const HeckeData ctx = HeckeData::make(3, 0, 1);
  const auto m = std::make_shared<const Modulus>(Modulus::cyclotomic(3, 2));
  EXPECT_FALSE(eval_in_quotient(log_truncation(ctx, 2), m) == eval_in_quotient(log_truncation(ctx, 1), m));
}

TEST(EvaluationLemmaTest, SmallGrid) {
  for (const HeckeData ctx : {HeckeData::make(2, 0, -1), HeckeData::make(3, 1, 1), HeckeData::make(3, -3, -1)}) {
    for (int k = 1; k <= 2; ++k)
      for (int n = k; n <= k + 3 && n <= 4; ++n) EXPECT_TRUE(eval_lemma_check(ctx, k, n)) << describe(ctx);
  }
}

}  // namespace
}  // namespace logdist
