#include <gtest/gtest.h>

#include "ffla/elim/derived.hpp"
#include "ffla/elim/echelon.hpp"
#include "ffla/elim/gf2.hpp"
#include "ffla/matrix/random.hpp"
#include "oracles.hpp"

using namespace ffla;

namespace {

const std::uint64_t kPrimes[] = {2, 3, 5, 65521, 2147483647};

DenseMatrix columns_prefix(const DenseMatrix& a, std::size_t c) {
  DenseMatrix s(a.field(), a.rows(), c);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < c; ++j) s(i, j) = a(i, j);
  return s;
}

// Column j is a pivot iff it raises the rank of the leading columns.
std::vector<std::size_t> rank_profile(const DenseMatrix& a) {
  std::vector<std::size_t> out;
  std::size_t prev = 0;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    const std::size_t r = oracle::rank(columns_prefix(a, j + 1));
    if (r > prev) out.push_back(j);
    prev = r;
  }
  return out;
}

DenseMatrix random_triangle(const PrimeField& f, std::size_t n, Uplo uplo, Diag diag, Rng& rng) {
  DenseMatrix t(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j)
        t(i, j) = diag == Diag::Unit ? 1 : f.random_nonzero(rng);
      else if ((uplo == Uplo::Upper) == (j > i))
        t(i, j) = f.random(rng);
    }
  return t;
}

MulConfig strassen_small() {
  MulConfig c;
  c.algorithm = MulAlgorithm::Strassen;
  c.strassen_threshold = 4;
  c.max_levels = 2;
  return c;
}

}  // namespace

TEST(Ple, Example) {
  const PrimeField f(7);
  const DenseMatrix a(f, {{0, 1}, {0, 0}});
  const PleFactors p = ple(a);
  EXPECT_EQ(p.rank, 1U);
  EXPECT_EQ(p.pivot_cols, (std::vector<std::size_t>{1}));
  EXPECT_EQ(p.reconstruct(), a);
}

TEST(Ple, FactorShapeAndRankProfile) {
  Rng rng(31);
  for (auto p : kPrimes) {
    const PrimeField f(p);
    for (int t = 0; t < 120; ++t) {
      const std::size_t m = rng.uniform(30), n = rng.uniform(30);
      const std::size_t r = std::min(m, n) == 0 ? 0 : rng.uniform(std::min(m, n) + 1);
      const DenseMatrix a = random_matrix_with_rank(m, n, r, f, rng);
      for (const MulConfig& cfg : {MulConfig{}, strassen_small()}) {
        const PleFactors pf = ple(a, cfg);
        ASSERT_EQ(pf.rank, r);
        ASSERT_EQ(pf.reconstruct(), a);
        ASSERT_EQ(pf.pivot_cols, rank_profile(a));
        ASSERT_EQ(pf.L.rows(), m);
        ASSERT_EQ(pf.L.cols(), r);
        for (std::size_t i = 0; i < r; ++i) {
          ASSERT_NE(pf.L(i, i), 0);
          for (std::size_t j = i + 1; j < r; ++j) ASSERT_EQ(pf.L(i, j), 0);
          ASSERT_EQ(pf.E(i, pf.pivot_cols[i]), 1);
        }
        ASSERT_TRUE(oracle::is_echelon(pf.E, false));
      }
    }
  }
}

TEST(Ple, DegenerateShapes) {
  const PrimeField f(5);
  for (auto [m, n] : {std::pair<std::size_t, std::size_t>{0, 0}, {0, 4}, {4, 0}, {1, 1}, {1, 6}, {6, 1}}) {
    const DenseMatrix z(f, m, n);
    const PleFactors p = ple(z);
    EXPECT_EQ(p.rank, 0U);
    EXPECT_EQ(p.reconstruct(), z);
  }
  Rng rng(32);
  const DenseMatrix row = DenseMatrix::random(f, 1, 9, rng);
  EXPECT_EQ(ple(row).reconstruct(), row);
}

TEST(Triangular, SolveMultiplyInvert) {
  Rng rng(33);
  for (auto p : kPrimes) {
    const PrimeField f(p);
    for (int t = 0; t < 30; ++t) {
      const std::size_t n = 1 + rng.uniform(24), k = 1 + rng.uniform(12);
      for (auto uplo : {Uplo::Upper, Uplo::Lower})
        for (auto diag : {Diag::Unit, Diag::NonUnit}) {
          const DenseMatrix a = random_triangle(f, n, uplo, diag, rng);
          const DenseMatrix b = DenseMatrix::random(f, n, k, rng), bt = DenseMatrix::random(f, k, n, rng);
          ASSERT_EQ(oracle::product(a, trsm({Side::Left, uplo, diag}, a, b)), b);
          ASSERT_EQ(oracle::product(trsm({Side::Right, uplo, diag}, a, bt), a), bt);
          ASSERT_EQ(trmm({Side::Left, uplo, diag}, a, b), oracle::product(a, b));
          ASSERT_EQ(trmm({Side::Right, uplo, diag}, a, bt), oracle::product(bt, a));
          ASSERT_EQ(oracle::product(a, trtri(a, uplo, diag)), DenseMatrix::identity(f, n));
        }
      const DenseMatrix u = random_triangle(f, n, Uplo::Upper, Diag::NonUnit, rng);
      const DenseMatrix l = random_triangle(f, n, Uplo::Lower, Diag::NonUnit, rng);
      ASSERT_EQ(trtrm(u, l), oracle::product(u, l));
    }
  }
}

TEST(Triangular, ZeroDiagonalIsSingular) {
  const PrimeField f(7);
  const DenseMatrix a(f, {{1, 2}, {0, 0}});
  EXPECT_THROW(trtri(a, Uplo::Upper, Diag::NonUnit), SingularError);
  EXPECT_THROW(trsm({Side::Left, Uplo::Upper, Diag::NonUnit}, a, DenseMatrix::identity(f, 2)), SingularError);
}

TEST(Echelon, TransformAndForm) {
  Rng rng(34);
  for (auto p : kPrimes) {
    const PrimeField f(p);
    for (int t = 0; t < 60; ++t) {
      const std::size_t m = rng.uniform(25), n = rng.uniform(25);
      const std::size_t r = std::min(m, n) == 0 ? 0 : rng.uniform(std::min(m, n) + 1);
      const DenseMatrix a = random_matrix_with_rank(m, n, r, f, rng);
      const EchelonForm e = row_echelon(a);
      ASSERT_EQ(e.rank, r);
      ASSERT_EQ(oracle::product(e.X, a), e.E);
      ASSERT_EQ(oracle::rank(e.X), m);
      ASSERT_TRUE(oracle::is_echelon(e.E, false));
      ASSERT_EQ(e.pivot_cols, rank_profile(a));

      const ReducedEchelonForm rr = reduced_row_echelon(a);
      ASSERT_EQ(rr.rank, r);
      ASSERT_EQ(oracle::product(rr.Y, a), rr.R);
      ASSERT_EQ(oracle::rank(rr.Y), m);
      ASSERT_TRUE(oracle::is_echelon(rr.R, true));
      ASSERT_EQ(reduced_row_echelon(rr.R).R, rr.R);
    }
  }
}

TEST(Echelon, ReducedFormIsUnique) {
  Rng rng(35);
  const PrimeField f(101);
  for (int t = 0; t < 30; ++t) {
    const DenseMatrix a = random_matrix_with_rank(12, 15, 1 + rng.uniform(12), f, rng);
    const DenseMatrix g = random_nonsingular(12, f, rng);
    EXPECT_EQ(reduced_row_echelon(oracle::product(g, a)).R, reduced_row_echelon(a).R);
  }
}

TEST(Derived, DeterminantAgainstLaplace) {
  Rng rng(36);
  for (auto p : kPrimes) {
    const PrimeField f(p);
    for (int t = 0; t < 100; ++t) {
      const std::size_t n = rng.uniform(8);
      const DenseMatrix a = t % 4 == 0 && n > 0 ? random_matrix_with_rank(n, n, n - 1, f, rng)
                                                 : DenseMatrix::random(f, n, n, rng);
      ASSERT_EQ(determinant(a), oracle::laplace_det(a));
    }
  }
  const PrimeField f(7);
  EXPECT_THROW(determinant(DenseMatrix(f, 2, 3)), DimensionError);
}

TEST(Derived, RankInverseSolve) {
  Rng rng(37);
  for (auto p : kPrimes) {
    const PrimeField f(p);
    for (int t = 0; t < 40; ++t) {
      const std::size_t n = 1 + rng.uniform(30);
      const DenseMatrix a = random_nonsingular(n, f, rng);
      EXPECT_EQ(rank(a), n);
      EXPECT_EQ(oracle::product(a, inverse(a)), DenseMatrix::identity(f, n));

      const std::size_t m = 1 + rng.uniform(30), k = 1 + rng.uniform(30);
      const DenseMatrix s = random_matrix_with_rank(m, k, rng.uniform(std::min(m, k) + 1), f, rng);
      EXPECT_EQ(rank(s), oracle::rank(s));
      const Vector y = f.random_vector(k, rng);
      const Vector b = oracle::matvec(s, y);
      const SolveResult res = solve(s, b);
      ASSERT_TRUE(res.consistent);
      EXPECT_EQ(oracle::matvec(s, *res.x), b);
    }
  }
}

TEST(Derived, InconsistentAndSingular) {
  const PrimeField f(11);
  const DenseMatrix a(f, {{1, 2}, {2, 4}});
  const Element b[] = {1, 1};
  const SolveResult r = solve(a, b);
  EXPECT_FALSE(r.consistent);
  EXPECT_FALSE(r.x.has_value());
  EXPECT_TRUE(r.inconsistent_row.has_value());
  EXPECT_THROW(inverse(a), SingularError);
  EXPECT_EQ(determinant(a), 0);
}

TEST(Derived, NullspaceBasis) {
  Rng rng(38);
  for (auto p : kPrimes) {
    const PrimeField f(p);
    for (int t = 0; t < 30; ++t) {
      const std::size_t m = 1 + rng.uniform(20), n = 1 + rng.uniform(20);
      const std::size_t r = rng.uniform(std::min(m, n) + 1);
      const DenseMatrix a = random_matrix_with_rank(m, n, r, f, rng);
      const DenseMatrix nb = nullspace_basis(a);
      ASSERT_EQ(nb.cols(), n - r);
      ASSERT_EQ(oracle::rank(nb), n - r);
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < nb.cols(); ++j) ASSERT_EQ(oracle::product(a, nb)(i, j), 0);
    }
  }
}

TEST(Gf2Elimination, MatchesPrimeFieldPath) {
  Rng rng(39);
  const PrimeField f2(2);
  for (int t = 0; t < 50; ++t) {
    const std::size_t m = 1 + rng.uniform(90), n = 1 + rng.uniform(90);
    const DenseMatrix a = random_matrix_with_rank(m, n, rng.uniform(std::min(m, n) + 1), f2, rng);
    const Gf2Echelon g = gf2_row_echelon(PackedGF2Matrix::from_dense(a), true);
    const ReducedEchelonForm rr = reduced_row_echelon(a);
    ASSERT_EQ(g.rank, rr.rank);
    ASSERT_EQ(g.pivot_cols, rr.pivot_cols);
    ASSERT_EQ(g.E.to_dense(), rr.R);
  }
}
