#include <gtest/gtest.h>

#include "ffla/elim/derived.hpp"
#include "ffla/matrix/random.hpp"
#include "ffla/poly/charpoly.hpp"
#include "oracles.hpp"

using namespace ffla;

namespace {

const std::uint64_t kPrimes[] = {2, 3, 5, 65521, 2147483647};

Polynomial random_monic(const PrimeField& f, std::size_t d, Rng& rng) {
  std::vector<Element> c(d + 1);
  for (auto& x : c) x = f.random(rng);
  c.back() = 1;
  return Polynomial(f, c);
}

bool annihilates(const Polynomial& p, const DenseMatrix& a) {
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const Vector e = oracle::poly_apply(p, a, detail::unit_vector(a.rows(), i));
    for (auto x : e)
      if (x != 0) return false;
  }
  return true;
}

}  // namespace

TEST(Charpoly, Companion) {
  Rng rng(41);
  for (auto p : kPrimes) {
    const PrimeField f(p);
    for (std::size_t d = 1; d <= 9; ++d) {
      const Polynomial g = random_monic(f, d, rng);
      const DenseMatrix c = oracle::companion(g);
      EXPECT_EQ(dense_charpoly(c), g);
      EXPECT_EQ(dense_minpoly(c), g);
    }
  }
}

TEST(Charpoly, DiagonalNilpotentZero) {
  const PrimeField f(7);
  const DenseMatrix d(f, {{2, 0, 0}, {0, 2, 0}, {0, 0, 5}});
  const Polynomial xm2 = Polynomial::linear(f, 2), xm5 = Polynomial::linear(f, 5);
  EXPECT_EQ(dense_charpoly(d), xm2 * xm2 * xm5);
  EXPECT_EQ(dense_minpoly(d), xm2 * xm5);

  const DenseMatrix n(f, {{0, 1, 0}, {0, 0, 1}, {0, 0, 0}});
  EXPECT_EQ(dense_charpoly(n), Polynomial::monomial(f, 3));
  EXPECT_EQ(dense_minpoly(n), Polynomial::monomial(f, 3));

  const DenseMatrix z(f, 1, 1);
  EXPECT_EQ(dense_charpoly(z), Polynomial::x(f));
  EXPECT_EQ(dense_minpoly(DenseMatrix(f, 4, 4)), Polynomial::x(f));
  EXPECT_EQ(dense_charpoly(DenseMatrix(f, 4, 4)), Polynomial::monomial(f, 4));
}

TEST(Charpoly, Identity) {
  const PrimeField f(65521);
  const DenseMatrix i = DenseMatrix::identity(f, 6);
  const Polynomial xm1 = Polynomial::linear(f, 1);
  EXPECT_EQ(dense_minpoly(i), xm1);
  Polynomial c = Polynomial::one(f);
  for (int k = 0; k < 6; ++k) c = c * xm1;
  EXPECT_EQ(dense_charpoly(i), c);
}

TEST(Charpoly, SymbolicOracleSmall) {
  Rng rng(42);
  for (auto p : kPrimes) {
    const PrimeField f(p);
    for (int t = 0; t < 40; ++t) {
      const std::size_t n = 1 + rng.uniform(5);
      const DenseMatrix a = DenseMatrix::random(f, n, n, rng);
      ASSERT_EQ(dense_charpoly(a), oracle::symbolic_charpoly(a));
    }
  }
}

TEST(Charpoly, MinpolyIsLargestInvariantFactor) {
  Rng rng(43);
  for (std::uint64_t p : {2, 3, 7}) {
    const PrimeField f(p);
    for (int t = 0; t < 30; ++t) {
      const std::size_t n = 1 + rng.uniform(5);
      DenseMatrix a = DenseMatrix::random(f, n, n, rng);
      // Low-rank and repeated blocks make nontrivial invariant factors likely.
      if (t % 3 == 0) a = random_matrix_with_rank(n, n, n / 2, f, rng);
      if (t % 3 == 1 && n >= 2) {
        const DenseMatrix b = DenseMatrix::random(f, n / 2, n / 2, rng);
        a = oracle::block_diagonal(b, b);
      }
      const auto inv = oracle::invariant_factors(a);
      ASSERT_EQ(dense_minpoly(a), inv.front());
    }
  }
}

TEST(Charpoly, Invariants) {
  Rng rng(44);
  for (auto p : kPrimes) {
    const PrimeField f(p);
    for (int t = 0; t < 40; ++t) {
      const std::size_t n = 1 + rng.uniform(24);
      const DenseMatrix a = t % 2 ? DenseMatrix::random(f, n, n, rng)
                                  : random_matrix_with_rank(n, n, rng.uniform(n + 1), f, rng);
      const Polynomial c = dense_charpoly(a), m = dense_minpoly(a);
      ASSERT_EQ(static_cast<std::size_t>(c.degree()), n);
      ASSERT_TRUE(c.is_monic() && m.is_monic());
      ASSERT_TRUE(m.divides(c));
      ASSERT_TRUE(annihilates(c, a));
      ASSERT_TRUE(annihilates(m, a));
      ASSERT_EQ(n % 2 ? f.neg(c[0]) : c[0], determinant(a));
      Element tr = 0;
      for (std::size_t i = 0; i < n; ++i) tr = f.add(tr, a(i, i));
      ASSERT_EQ(c[n - 1], f.neg(tr));
    }
  }
}

TEST(Charpoly, SimilarityInvariance) {
  Rng rng(45);
  const PrimeField f(65521);
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 1 + rng.uniform(15);
    const DenseMatrix a = DenseMatrix::random(f, n, n, rng);
    const DenseMatrix g = random_nonsingular(n, f, rng);
    const DenseMatrix b = oracle::product(oracle::product(g, a), inverse(g));
    EXPECT_EQ(dense_charpoly(b), dense_charpoly(a));
    EXPECT_EQ(dense_minpoly(b), dense_minpoly(a));
  }
}

TEST(Charpoly, KrylovMinpolyOfVector) {
  const PrimeField f(11);
  const DenseMatrix d(f, {{2, 0, 0}, {0, 3, 0}, {0, 0, 3}});
  const Element e0[] = {1, 0, 0};
  EXPECT_EQ(krylov_minpoly(d, e0), Polynomial::linear(f, 2));
  const Element zero[] = {0, 0, 0};
  EXPECT_EQ(krylov_minpoly(d, zero), Polynomial::one(f));
}

TEST(Charpoly, RejectsNonSquare) {
  const PrimeField f(5);
  EXPECT_THROW(dense_charpoly(DenseMatrix(f, 2, 3)), DimensionError);
}
