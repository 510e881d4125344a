#include <gtest/gtest.h>

#include "ffla/elim/derived.hpp"
#include "ffla/matrix/random.hpp"
#include "ffla/sparse/elimination.hpp"
#include "oracles.hpp"

using namespace ffla;

namespace {

SparseMatrix random_sparse(const PrimeField& f, std::size_t m, std::size_t n, double density, Rng& rng) {
  std::vector<Triplet> t;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (rng.uniform_real() < density) t.push_back({i, j, f.random_nonzero(rng)});
  return SparseMatrix::from_triplets(f, m, n, std::move(t));
}

// Diagonal plus a full row and column at index `hub`.
SparseMatrix arrow(const PrimeField& f, std::size_t n, std::size_t hub, Rng& rng) {
  std::vector<Triplet> t;
  for (std::size_t i = 0; i < n; ++i) {
    t.push_back({i, i, f.random_nonzero(rng)});
    if (i != hub) {
      t.push_back({hub, i, f.random_nonzero(rng)});
      t.push_back({i, hub, f.random_nonzero(rng)});
    }
  }
  return SparseMatrix::from_triplets(f, n, n, std::move(t));
}

// Row i of A = (U[s] if i is the pivot row of step s) + sum of its recorded multiples of U.
DenseMatrix reconstruct(const SparseElimination& e, const PrimeField& f, std::size_t m, std::size_t n) {
  DenseMatrix d(f, m, n);
  for (std::size_t s = 0; s < e.rank; ++s)
    for (const auto& x : e.U[s]) d(e.row_order[s], x.col) = f.add(d(e.row_order[s], x.col), x.value);
  for (const auto& mu : e.multipliers)
    for (const auto& x : e.U[mu.col]) d(mu.row, x.col) = f.add(d(mu.row, x.col), f.mul(mu.value, x.value));
  return d;
}

}  // namespace

TEST(SparseElim, DiagonalHasNoFill) {
  Rng rng(71);
  const PrimeField f(65521);
  std::vector<Triplet> t;
  for (std::size_t i = 0; i < 40; ++i) t.push_back({i, i, f.random_nonzero(rng)});
  const SparseMatrix d = SparseMatrix::from_triplets(f, 40, 40, t);
  for (auto pol : {PivotPolicy::Reordering, PivotPolicy::FirstNonzero}) {
    SparseEliminationOptions opt;
    opt.policy = pol;
    const SparseElimination e = reordered_elimination(d, opt);
    EXPECT_EQ(e.rank, 40U);
    EXPECT_EQ(e.fill.fill_in, 0U);
    EXPECT_EQ(*e.det, determinant(d.to_dense()));
  }
}

TEST(SparseElim, ArrowWithDenseFirstRowAndColumn) {
  Rng rng(72);
  const PrimeField f(65521);
  const std::size_t n = 60;
  const SparseMatrix a = arrow(f, n, 0, rng);
  SparseEliminationOptions opt;
  const SparseElimination good = reordered_elimination(a, opt);
  opt.policy = PivotPolicy::FirstNonzero;
  const SparseElimination naive = reordered_elimination(a, opt);
  EXPECT_EQ(good.fill.fill_in, 0U);
  EXPECT_GE(naive.fill.fill_in, (n - 1) * (n - 1) - n);
  EXPECT_EQ(good.rank, naive.rank);
  EXPECT_EQ(*good.det, *naive.det);
  EXPECT_EQ(*good.det, determinant(a.to_dense()));
}

TEST(SparseElim, ArrowWithDenseLastRowAndColumn) {
  // The hub comes last, so pivoting in natural order creates no fill either.
  Rng rng(73);
  const PrimeField f(65521);
  const SparseMatrix a = arrow(f, 60, 59, rng);
  SparseEliminationOptions opt;
  EXPECT_EQ(reordered_elimination(a, opt).fill.fill_in, 0U);
  opt.policy = PivotPolicy::FirstNonzero;
  EXPECT_EQ(reordered_elimination(a, opt).fill.fill_in, 0U);
}

TEST(SparseElim, RankAndDeterminantAgainstDense) {
  Rng rng(74);
  for (std::uint64_t p : {2, 3, 65521, 2147483647}) {
    const PrimeField f(p);
    for (int t = 0; t < 40; ++t) {
      const std::size_t m = 1 + rng.uniform(50), n = t % 2 ? m : 1 + rng.uniform(50);
      const SparseMatrix a = random_sparse(f, m, n, 0.02 + 0.15 * rng.uniform_real(), rng);
      const DenseMatrix d = a.to_dense();
      for (auto pol : {PivotPolicy::Reordering, PivotPolicy::FirstNonzero}) {
        SparseEliminationOptions opt;
        opt.policy = pol;
        opt.check_counts = true;
        opt.keep_multipliers = true;
        const SparseElimination e = reordered_elimination(a, opt);
        ASSERT_EQ(e.rank, oracle::rank(d));
        ASSERT_EQ(e.det.has_value(), m == n);
        if (m == n) {
          ASSERT_EQ(*e.det, determinant(d));
        }
        ASSERT_EQ(reconstruct(e, f, m, n), d);
      }
    }
  }
}

TEST(SparseElim, TwoHundredAtTwoPercent) {
  Rng rng(75);
  const PrimeField f(65521);
  const SparseMatrix a = random_sparse(f, 200, 200, 0.02, rng);
  const DenseMatrix d = a.to_dense();
  const SparseElimination e = reordered_elimination(a);
  const SparseElimination h = hybrid_elimination(a, 0.2);
  EXPECT_EQ(e.rank, rank(d));
  EXPECT_EQ(h.rank, e.rank);
  EXPECT_EQ(*e.det, determinant(d));
  EXPECT_EQ(*h.det, *e.det);
  SparseEliminationOptions opt;
  opt.policy = PivotPolicy::FirstNonzero;
  EXPECT_LE(e.fill.fill_in, reordered_elimination(a, opt).fill.fill_in);
}

TEST(Hybrid, SwitchingRules) {
  Rng rng(76);
  const PrimeField f(65521);
  const SparseMatrix a = random_sparse(f, 80, 80, 0.05, rng);
  const SparseElimination never = hybrid_elimination(a, 1.0, 0);
  EXPECT_FALSE(never.switch_step.has_value());
  const SparseElimination tiny = hybrid_elimination(a, 0.0, 0);
  EXPECT_FALSE(tiny.switch_step.has_value());
  const SparseElimination now = hybrid_elimination(a, 0.0);
  ASSERT_TRUE(now.switch_step.has_value());
  EXPECT_EQ(*now.switch_step, 0U);
  EXPECT_EQ(now.dense_rows, 80U);
  for (const auto* e : {&never, &tiny, &now}) {
    EXPECT_EQ(e->rank, rank(a.to_dense()));
    EXPECT_EQ(*e->det, determinant(a.to_dense()));
  }
  EXPECT_THROW(hybrid_elimination(a, 1.5), ConfigError);
}

TEST(Hybrid, AgreesAcrossThresholds) {
  Rng rng(77);
  for (std::uint64_t p : {3, 65521}) {
    const PrimeField f(p);
    for (int t = 0; t < 30; ++t) {
      const std::size_t n = 2 + rng.uniform(80);
      const SparseMatrix a = random_sparse(f, n, n, 0.01 + 0.09 * rng.uniform_real(), rng);
      const DenseMatrix d = a.to_dense();
      const std::size_t r = oracle::rank(d);
      const Element det = determinant(d);
      for (double tau : {0.1, 0.2, 0.5}) {
        const SparseElimination h = hybrid_elimination(a, tau);
        ASSERT_EQ(h.rank, r);
        ASSERT_EQ(*h.det, det);
        if (h.switch_step) {
          ASSERT_EQ(h.dense_rows + *h.switch_step, n);
        }
      }
    }
  }
}

TEST(SparseSolve, ConsistentAndInconsistent) {
  Rng rng(78);
  const PrimeField f(65521);
  for (int t = 0; t < 40; ++t) {
    const std::size_t m = 1 + rng.uniform(40), n = 1 + rng.uniform(40);
    const SparseMatrix a = random_sparse(f, m, n, 0.1, rng);
    const Vector b = oracle::matvec(a, f.random_vector(n, rng));
    const SolveResult s = sparse_solve(a, b);
    ASSERT_TRUE(s.consistent);
    ASSERT_EQ(oracle::matvec(a, *s.x), b);
  }
  const SparseMatrix z = SparseMatrix::from_triplets(f, 2, 2, {{0, 0, 1}});
  const Element b[] = {1, 1};
  const SolveResult s = sparse_solve(z, b);
  EXPECT_FALSE(s.consistent);
  EXPECT_EQ(s.inconsistent_row, std::optional<std::size_t>{1});
}
