#include <gtest/gtest.h>

#include "ffla/mm/gemm.hpp"
#include "oracles.hpp"

using namespace ffla;

namespace {

const std::uint64_t kPrimes[] = {3, 5, 65521, 2147483647};

DenseMatrix rand_mat(const PrimeField& f, std::size_t m, std::size_t n, Rng& rng) {
  return DenseMatrix::random(f, m, n, rng);
}

MulConfig strassen_cfg(unsigned levels, std::size_t threshold = 2) {
  MulConfig c;
  c.algorithm = MulAlgorithm::Strassen;
  c.max_levels = levels;
  c.strassen_threshold = threshold;
  return c;
}

}  // namespace

TEST(Classic, Examples) {
  const PrimeField f(5);
  const DenseMatrix a(f, {{1, 2}, {3, 4}}), b(f, {{1, 0}, {1, 1}});
  EXPECT_EQ(gemm_classic(a, b), DenseMatrix(f, {{3, 2}, {2, 4}}));
  EXPECT_EQ(gemm_classic(DenseMatrix::identity(f, 2), b), b);
  OpCounter c;
  Rng rng(1);
  (void)gemm_classic(rand_mat(f, 8, 8, rng), rand_mat(f, 8, 8, rng), &c);
  EXPECT_EQ(c.field_mul, 512U);
  EXPECT_EQ(c.field_ops(), 1024U);
}

TEST(Classic, MatchesOracle) {
  Rng rng(2);
  for (auto p : kPrimes) {
    const PrimeField f(p);
    for (int t = 0; t < 50; ++t) {
      const DenseMatrix a = rand_mat(f, 1 + rng.uniform(20), 1 + rng.uniform(20), rng);
      const DenseMatrix b = rand_mat(f, a.cols(), 1 + rng.uniform(20), rng);
      ASSERT_EQ(gemm_classic(a, b), oracle::product(a, b));
    }
  }
}

TEST(Fgemm, EqualsClassic) {
  Rng rng(3);
  for (auto p : kPrimes) {
    const PrimeField f(p);
    for (int t = 0; t < 500; ++t) {
      const DenseMatrix a = rand_mat(f, 1 + rng.uniform(16), 1 + rng.uniform(16), rng);
      const DenseMatrix b = rand_mat(f, a.cols(), 1 + rng.uniform(16), rng);
      ASSERT_EQ(fgemm(a, b), gemm_classic(a, b));
    }
  }
}

TEST(Fgemm, SmallBetaForcesManyBlocks) {
  Rng rng(4);
  const PrimeField f(2147483647);
  MulConfig c;
  c.beta = 62;
  EXPECT_EQ(fgemm_block_depth(2147483647, 62), 2U);
  OpCounter ops;
  c.counter = &ops;
  const DenseMatrix a = rand_mat(f, 9, 40, rng), b = rand_mat(f, 40, 7, rng);
  EXPECT_EQ(fgemm(a, b, c), gemm_classic(a, b));
  EXPECT_GT(ops.reductions, 9U * 7U);
}

TEST(Fgemm, BlockDepthExample) {
  const unsigned __int128 pm1 = 524286;
  const auto expect = static_cast<std::uint64_t>((static_cast<unsigned __int128>(1) << 54) / (pm1 * pm1));
  EXPECT_EQ(fgemm_block_depth(524287, 53), expect);
}

TEST(Fgemm, SingleColumnIsMatvec) {
  Rng rng(5);
  const PrimeField f(65521);
  const DenseMatrix a = rand_mat(f, 12, 9, rng), b = rand_mat(f, 9, 1, rng);
  const DenseMatrix c = fgemm(a, b);
  Vector x(9);
  for (std::size_t i = 0; i < 9; ++i) x[i] = b(i, 0);
  const Vector y = oracle::matvec(a, x);
  for (std::size_t i = 0; i < 12; ++i) EXPECT_EQ(c(i, 0), y[i]);
}

TEST(Fgemm, RejectsEvenCharacteristicAndBadBeta) {
  const PrimeField f2(2);
  EXPECT_THROW(fgemm(DenseMatrix(f2, 2, 2), DenseMatrix(f2, 2, 2)), ConfigError);
  MulConfig c;
  c.beta = 63;
  const PrimeField f(7);
  EXPECT_THROW(fgemm(DenseMatrix(f, 2, 2), DenseMatrix(f, 2, 2), c), ConfigError);
  c.beta = 1;
  EXPECT_THROW(fgemm(DenseMatrix(f, 2, 2), DenseMatrix(f, 2, 2), c), ConfigError);
}

TEST(Strassen, BoundExamples) {
  EXPECT_EQ(strassen_bound(2, 2, 1), 4);
  EXPECT_EQ(strassen_bound(3, 4, 2), 100);
  EXPECT_EQ(strassen_bound(3, 100, 1), 800);
  EXPECT_EQ(strassen_bound(7, 10, 0), 360);
}

TEST(Strassen, MaxLevelsByDirectEvaluation) {
  const unsigned l = max_strassen_levels(3, 1024, 53);
  const BigInt cap = BigInt(1) << 54;
  EXPECT_LT(strassen_bound(3, 1024, l), cap);
  if ((std::uint64_t{1} << (l + 1)) <= 1024) {
    EXPECT_GE(strassen_bound(3, 1024, l + 1), cap);
  }
  unsigned prev = 64;
  for (std::uint64_t p = 3; p < (1U << 20); p = p * 3 + 2) {
    const unsigned lp = max_strassen_levels(p, 1024, 53);
    EXPECT_LE(lp, prev);
    prev = lp;
  }
}

TEST(Strassen, EqualsClassic) {
  Rng rng(6);
  for (auto p : kPrimes) {
    const PrimeField f(p);
    for (int t = 0; t < 100; ++t) {
      const DenseMatrix a = rand_mat(f, 1 + rng.uniform(40), 1 + rng.uniform(40), rng);
      const DenseMatrix b = rand_mat(f, a.cols(), 1 + rng.uniform(40), rng);
      const DenseMatrix ref = gemm_classic(a, b);
      for (unsigned l : {1U, 2U, 3U}) ASSERT_EQ(gemm_strassen(a, b, strassen_cfg(l)), ref);
    }
  }
}

TEST(Strassen, ExamplesFromTheContract) {
  Rng rng(7);
  const PrimeField f(65521);
  const DenseMatrix a = rand_mat(f, 64, 64, rng), b = rand_mat(f, 64, 64, rng);
  for (unsigned l : {1U, 2U}) EXPECT_EQ(gemm_strassen(a, b, strassen_cfg(l, 8)), gemm_classic(a, b));
  const DenseMatrix c = rand_mat(f, 65, 65, rng), d = rand_mat(f, 65, 65, rng);
  EXPECT_EQ(gemm_strassen(c, d, strassen_cfg(1, 8)), gemm_classic(c, d));

  OpCounter ops;
  MulConfig cfg = strassen_cfg(2, 32);
  cfg.counter = &ops;
  (void)gemm_strassen(rand_mat(f, 128, 128, rng), rand_mat(f, 128, 128, rng), cfg);
  EXPECT_EQ(ops.base_products, 49U);
}

TEST(Strassen, ObservedIntermediatesRespectBound) {
  Rng rng(8);
  for (std::uint64_t p : {3, 5, 65521}) {
    const PrimeField f(p);
    for (int t = 0; t < 40; ++t) {
      const std::size_t k = 4 + rng.uniform(60);
      const DenseMatrix a = rand_mat(f, 8 + rng.uniform(24), k, rng), b = rand_mat(f, k, 8 + rng.uniform(24), rng);
      for (unsigned l : {1U, 2U}) {
        OpCounter ops;
        MulConfig cfg = strassen_cfg(l);
        cfg.counter = &ops;
        ASSERT_EQ(gemm_strassen(a, b, cfg), gemm_classic(a, b));
        const unsigned used = detail::planned_levels(a.rows(), k, b.cols(), l, 2);
        EXPECT_LE(BigInt(ops.max_abs_intermediate), strassen_bound(p, k, used));
      }
    }
  }
}

TEST(Strassen, DelayedPolicyRefusesWhatAdaptiveReduces) {
  Rng rng(9);
  const PrimeField f(2147483647);
  const DenseMatrix a = rand_mat(f, 64, 64, rng), b = rand_mat(f, 64, 64, rng);
  MulConfig cfg = strassen_cfg(3);
  cfg.beta = 62;
  EXPECT_EQ(gemm_strassen(a, b, cfg), gemm_classic(a, b));
  cfg.policy = ReductionPolicy::Delayed;
  EXPECT_THROW(gemm_strassen(a, b, cfg), ConfigError);
}

TEST(Gemm, UpdateComputesAlphaAbPlusBetaC) {
  Rng rng(10);
  const PrimeField f(65521);
  for (auto alg : {MulAlgorithm::Classic, MulAlgorithm::Fgemm, MulAlgorithm::Strassen}) {
    MulConfig cfg;
    cfg.algorithm = alg;
    cfg.strassen_threshold = 4;
    const DenseMatrix a = rand_mat(f, 17, 13, rng), b = rand_mat(f, 13, 11, rng);
    DenseMatrix c = rand_mat(f, 17, 11, rng);
    const Element alpha = f.random(rng), beta = f.random(rng);
    const DenseMatrix ab = oracle::product(a, b);
    DenseMatrix expect(f, 17, 11);
    for (std::size_t i = 0; i < 17; ++i)
      for (std::size_t j = 0; j < 11; ++j) expect(i, j) = f.add(f.mul(alpha, ab(i, j)), f.mul(beta, c(i, j)));
    gemm_update(f, alpha, a.view(), b.view(), beta, c.view(), cfg);
    EXPECT_EQ(c, expect);
  }
}

TEST(Gemm, DimensionMismatchThrows) {
  const PrimeField f(7);
  EXPECT_THROW(gemm(DenseMatrix(f, 2, 3), DenseMatrix(f, 2, 3)), DimensionError);
  EXPECT_THROW(gemm(DenseMatrix(f, 2, 2), DenseMatrix(PrimeField(5), 2, 2)), DimensionError);
}

TEST(Gemm, EmptyShapes) {
  const PrimeField f(7);
  EXPECT_EQ(gemm(DenseMatrix(f, 3, 0), DenseMatrix(f, 0, 4)), DenseMatrix(f, 3, 4));
  EXPECT_EQ(gemm(DenseMatrix(f, 0, 3), DenseMatrix(f, 3, 4)).rows(), 0U);
}
