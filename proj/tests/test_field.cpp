#include <cmath>

#include <gtest/gtest.h>

#include "ffla/field/ext_field.hpp"
#include "ffla/field/factor.hpp"
#include "ffla/field/prime_field.hpp"

using namespace ffla;

namespace {

const std::uint64_t kPrimes[] = {2, 3, 5, 7, 65521, 2147483647, 4611686018427387847ULL};

Polynomial poly(std::uint64_t p, std::vector<Element> c) { return Polynomial(PrimeField(p), std::move(c)); }

// Smallest-degree monic divisors found by enumeration, divided out until
// nothing is left. Returns the distinct degrees, sorted.
std::vector<unsigned> brute_degrees(Polynomial f) {
  const PrimeField& F = f.field();
  const std::uint64_t q = F.characteristic();
  std::vector<unsigned> out;
  f = f * Polynomial::constant(F, F.inv(f[static_cast<std::size_t>(f.degree())]));
  for (int d = 1; f.degree() > 0; ++d) {
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= q;
    for (std::uint64_t code = 0; code < count && f.degree() > 0; ++code) {
      std::vector<Element> c(static_cast<std::size_t>(d) + 1, 0);
      std::uint64_t v = code;
      for (int i = 0; i < d; ++i, v /= q) c[static_cast<std::size_t>(i)] = static_cast<Element>(v % q);
      c.back() = 1;
      const Polynomial g(F, c);
      if (!g.divides(f)) continue;
      out.push_back(static_cast<unsigned>(d));
      while (g.divides(f)) f = f / g;
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

TEST(PrimeField, SmallExamples) {
  EXPECT_EQ(PrimeField(5).mul(3, 4), 2);
  for (auto p : kPrimes) EXPECT_EQ(PrimeField(p).inv(1), 1);
  EXPECT_EQ(PrimeField(5, Representation::Centered).neg(2), -2);
}

TEST(PrimeField, RejectsBadModuli) {
  EXPECT_THROW(PrimeField(1), DomainError);
  EXPECT_THROW(PrimeField(15), DomainError);
  EXPECT_THROW(PrimeField(std::uint64_t{1} << 62), DomainError);
  EXPECT_THROW(PrimeField(2, Representation::Centered), DomainError);
  EXPECT_THROW(PrimeField(7).inv(0), DomainError);
}

TEST(PrimeField, AlgebraicLaws) {
  Rng rng(11);
  for (auto p : kPrimes) {
    for (auto rep : {Representation::Classic, Representation::Centered}) {
      if (p == 2 && rep == Representation::Centered) continue;
      const PrimeField f(p, rep);
      for (int t = 0; t < 10000; ++t) {
        const Element a = f.random(rng), b = f.random(rng), c = f.random(rng);
        ASSERT_TRUE(f.is_canonical(a));
        ASSERT_EQ(f.add(a, b), f.add(b, a));
        ASSERT_EQ(f.mul(a, b), f.mul(b, a));
        ASSERT_EQ(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
        ASSERT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        ASSERT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        ASSERT_EQ(f.sub(f.add(a, b), b), a);
        ASSERT_EQ(f.add(a, f.neg(a)), 0);
        if (a != 0) {
          ASSERT_EQ(f.mul(a, f.inv(a)), 1);
        }
      }
    }
  }
}

TEST(PrimeField, CenteredAgreesWithClassic) {
  Rng rng(12);
  for (auto p : kPrimes) {
    if (p == 2) continue;
    const PrimeField cl(p), ce(p, Representation::Centered);
    for (int t = 0; t < 10000; ++t) {
      const Element a = cl.random(rng), b = cl.random(rng);
      const Element ac = ce.convert(a, cl), bc = ce.convert(b, cl);
      ASSERT_EQ(cl.convert(ce.mul(ac, bc), ce), cl.mul(a, b));
      ASSERT_EQ(cl.convert(ce.add(ac, bc), ce), cl.add(a, b));
      ASSERT_EQ(cl.convert(ce.sub(ac, bc), ce), cl.sub(a, b));
      if (a != 0) {
        ASSERT_EQ(cl.convert(ce.inv(ac), ce), cl.inv(a));
      }
    }
  }
}

TEST(Factor, DistinctDegreeExamples) {
  EXPECT_EQ(distinct_degree_factor_degrees(poly(2, {0, 1})), (std::vector<unsigned>{1}));
  EXPECT_EQ(distinct_degree_factor_degrees(poly(2, {0, 1, 1})), (std::vector<unsigned>{1, 1}));
  EXPECT_EQ(distinct_degree_factor_degrees(poly(2, {1, 1, 1})), (std::vector<unsigned>{2}));
}

TEST(Factor, TotientExamples) {
  EXPECT_EQ(totient_phi(poly(2, {0, 1}), 1), Rational(1, 2));
  EXPECT_EQ(totient_phi(poly(2, {0, 1, 1}), 1), Rational(1, 4));
  EXPECT_EQ(totient_phi(poly(2, {0, 1}), 10), Rational(1023, 1024));
}

TEST(Factor, DegreesMatchBruteFactorization) {
  Rng rng(13);
  for (std::uint64_t q : {2, 3, 5}) {
    const PrimeField f(q);
    for (int t = 0; t < 60; ++t) {
      const std::size_t d = 1 + rng.uniform(8);
      std::vector<Element> c(d + 1);
      for (auto& x : c) x = f.random(rng);
      c.back() = 1;
      const Polynomial g(f, c);
      auto lib = distinct_degree_factor_degrees(g);
      lib.erase(std::unique(lib.begin(), lib.end()), lib.end());
      EXPECT_EQ(lib, brute_degrees(g)) << g.to_string();
    }
  }
}

TEST(Factor, TotientMultiplicativeOnCoprimeSquarefree) {
  Rng rng(14);
  for (std::uint64_t q : {2, 3, 5}) {
    const PrimeField f(q);
    int checked = 0;
    for (int t = 0; t < 400 && checked < 25; ++t) {
      auto draw = [&] {
        const std::size_t d = 1 + rng.uniform(4);
        std::vector<Element> c(d + 1);
        for (auto& x : c) x = f.random(rng);
        c.back() = 1;
        return Polynomial(f, c);
      };
      const Polynomial a = draw(), b = draw();
      if (gcd(a, b).degree() != 0 || squarefree_part(a) != a || squarefree_part(b) != b) continue;
      // Disjoint irreducible factors: no degree appears in both.
      const auto da = brute_degrees(a), db = brute_degrees(b);
      std::vector<unsigned> both;
      std::set_intersection(da.begin(), da.end(), db.begin(), db.end(), std::back_inserter(both));
      if (!both.empty()) continue;
      ++checked;
      for (unsigned k : {1U, 2U, 5U}) EXPECT_EQ(totient_phi(a * b, k), totient_phi(a, k) * totient_phi(b, k));
    }
    EXPECT_GT(checked, 5);
  }
}

TEST(Polynomial, GcdLcmDivmod) {
  const PrimeField f(7);
  Rng rng(15);
  for (int t = 0; t < 200; ++t) {
    std::vector<Element> ca(1 + rng.uniform(6)), cb(1 + rng.uniform(6));
    for (auto& x : ca) x = f.random(rng);
    for (auto& x : cb) x = f.random(rng);
    const Polynomial a(f, ca), b(f, cb);
    if (b.is_zero()) continue;
    const auto [qq, r] = divmod(a, b);
    EXPECT_EQ(qq * b + r, a);
    EXPECT_LT(r.degree(), b.degree());
    if (a.is_zero()) continue;
    const Polynomial g = gcd(a, b);
    EXPECT_TRUE(g.is_monic());
    EXPECT_TRUE(g.divides(a));
    EXPECT_TRUE(g.divides(b));
    const Polynomial l = lcm(a, b);
    EXPECT_TRUE(a.divides(l));
    EXPECT_TRUE(b.divides(l));
    EXPECT_EQ(l.degree() + g.degree(), a.degree() + b.degree());
  }
}

TEST(ExtField, KroneckerExamples) {
  Rng rng(16);
  const ExtField e(3, 2, rng);
  const std::uint64_t one[] = {1, 0};
  const std::uint64_t x[] = {0, 1};
  for (std::uint64_t q : {4, 16, 1024}) EXPECT_EQ(e.kronecker_eval(e.from_coefficients(one), q), 1U);
  EXPECT_EQ(e.kronecker_eval(e.from_coefficients(x), 16), 16U);
}

TEST(ExtField, ProductTableMatchesPolynomialArithmetic) {
  Rng rng(17);
  for (auto [p, k] : {std::pair<std::uint64_t, unsigned>{2, 8}, {3, 5}, {5, 3}, {7, 2}, {2, 1}}) {
    const ExtField e(p, k, rng);
    const PrimeField& f = e.base_field();
    EXPECT_EQ(e.order(), static_cast<std::uint32_t>(std::pow(p, k)));
    for (int t = 0; t < 500; ++t) {
      const auto a = e.random(rng), b = e.random(rng);
      auto as_poly = [&](ExtField::Element z) {
        const auto c = e.coefficients(z);
        return Polynomial(f, std::vector<Element>(c.begin(), c.end()));
      };
      const Polynomial prod = (as_poly(a) * as_poly(b)) % e.modulus();
      const Polynomial sum = (as_poly(a) + as_poly(b)) % e.modulus();
      ASSERT_EQ(as_poly(e.mul(a, b)), prod);
      ASSERT_EQ(as_poly(e.add(a, b)), sum);
      if (!e.is_zero(a)) {
        ASSERT_EQ(e.mul(a, e.inv(a)), e.one());
      }
    }
  }
}

TEST(ExtField, RejectsReducibleModulus) {
  EXPECT_THROW(ExtField(poly(2, {0, 1, 1})), DomainError);
}
