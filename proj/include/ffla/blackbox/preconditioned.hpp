#ifndef FFLA_BLACKBOX_PRECONDITIONED_HPP
#define FFLA_BLACKBOX_PRECONDITIONED_HPP

#include "ffla/blackbox/wiedemann.hpp"
#include "ffla/elim/derived.hpp"

namespace ffla {

namespace detail {

inline Vector random_nonzero_vector(const PrimeField& f, std::size_t n, Rng& rng) {
  Vector v(n);
  for (auto& x : v) x = f.random_nonzero(rng);
  return v;
}

inline bool divisible_by_x(const Polynomial& p) { return !p.is_zero() && p[0] == 0; }

}  // namespace detail

struct BlackboxRank {
  std::size_t rank = 0;
  ProbabilityReport report;
};

/// Rank from the minimal polynomial of D1 A^T D2 A D1.
inline BlackboxRank blackbox_rank(const BlackboxOperator& a, std::uint64_t seed, std::size_t projections = 1) {
  const PrimeField& f = a.field();
  const std::uint64_t s = f.characteristic() - 1;
  const std::size_t m = a.rows(), n = a.cols();
  Rng rng(seed);
  const DiagonalBlackbox d1(f, detail::random_nonzero_vector(f, n, rng));
  const DiagonalBlackbox d2(f, detail::random_nonzero_vector(f, m, rng));
  const TransposeBlackbox at(a);
  const ComposedBlackbox ad1(a, d1);
  const ComposedBlackbox d2ad1(d2, ad1);
  const ComposedBlackbox atd2ad1(at, d2ad1);
  const ComposedBlackbox pre(d1, atd2ad1);

  BlackboxRank out;
  if (n == 0 || m == 0) {
    out.report = detail::make_report("blackbox-rank", "1 - (11 n^2 - n) / (2 |S|)", 1, s);
    return out;
  }
  const auto [mp, mc] = minpoly_montecarlo(pre, projections, rng.next());
  const auto deg = static_cast<std::size_t>(mp.degree());
  out.rank = detail::divisible_by_x(mp) ? deg - 1 : deg;
  const BigInt nn(n);
  out.report = detail::make_report("blackbox-rank", "1 - (11 n^2 - n) / (2 |S|)",
                                   detail::one_minus(11 * nn * nn - nn, 2, s), s);
  out.report.trials = mc.trials;
  out.report.successes = mc.successes;
  return out;
}

struct BlackboxDet {
  Element value = 0;
  bool certified = false;
  std::size_t draws = 0;
  ProbabilityReport report;
};

/// Determinant from minpoly(U A), U unit upper bidiagonal. Redraws U until
/// the minimal polynomial has degree n (det = (-1)^n times its constant
/// term) or is divisible by x (det = 0); both outcomes are certified.
inline BlackboxDet blackbox_det(const BlackboxOperator& a, std::uint64_t seed, std::size_t max_draws = 10) {
  detail::require_dims(a.rows() == a.cols(), "determinant of a non-square operator");
  const PrimeField& f = a.field();
  const std::uint64_t s = f.characteristic() - 1;
  const std::size_t n = a.rows();
  const BigInt nn(n);
  BlackboxDet out;
  out.report = detail::make_report("blackbox-det", "1 - (n^2 - n) / (2 |S|)", detail::one_minus(nn * nn - nn, 2, s), s);
  if (n == 0) {
    out.value = 1;
    out.certified = true;
    return out;
  }
  Rng rng(seed);
  for (std::size_t t = 0; t < max_draws; ++t) {
    Rng r = rng.split();
    const UnitBidiagonalBlackbox u(f, detail::random_nonzero_vector(f, n - 1, r));
    const ComposedBlackbox ua(u, a);
    const Vector pu = f.random_vector(n, r);
    const Vector pb = f.random_vector(n, r);
    const Polynomial mp = wiedemann_minpoly(ua, pu, pb);
    ++out.draws;
    const Element c0 = mp.is_zero() ? 0 : mp[0];
    out.value = n % 2 ? f.neg(c0) : c0;
    if (detail::divisible_by_x(mp)) {
      out.value = 0;
      out.certified = true;
    } else if (static_cast<std::size_t>(mp.degree()) == n) {
      out.certified = true;
    }
    if (out.certified) break;
  }
  out.report.trials = out.draws;
  out.report.successes = out.certified ? 1 : 0;
  if (!out.certified) out.report.warning = "no certified draw within the cap; Monte-Carlo answer";
  return out;
}

struct InvariantFactor {
  Polynomial factor;
  ProbabilityReport report;
};

/// gcd(minpoly(A), minpoly(A + U V)) for random U (n x k) and V (k x n) of
/// rank k: the (k+1)-th invariant factor.
inline InvariantFactor invariant_factor(const BlackboxOperator& a, std::size_t k, std::uint64_t seed,
                                        std::size_t projections = 2) {
  detail::require_dims(a.rows() == a.cols(), "invariant factors of a non-square operator");
  const std::size_t n = a.rows();
  if (k < 1 || k >= n) throw DomainError("invariant_factor needs 1 <= k < n");
  const PrimeField& f = a.field();
  const std::uint64_t s = f.characteristic() - 1;
  Rng rng(seed);
  DenseMatrix u(f, n, k), v(f, k, n);
  for (std::size_t tries = 0;; ++tries) {
    if (tries == 100) throw DomainError("cannot draw rank-k update matrices from the nonzero elements of this field");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < k; ++j) u(i, j) = f.random_nonzero(rng);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < n; ++j) v(i, j) = f.random_nonzero(rng);
    if (rank(u) == k && rank(v) == k) break;
  }
  const RankUpdateBlackbox aup(a, u, v);
  const auto [pa, ra] = minpoly_montecarlo(a, projections, rng.next());
  const auto [pu, ru] = minpoly_montecarlo(aup, projections, rng.next());
  const BigInt nn(n), kk(k);
  InvariantFactor out{gcd(pa, pu), detail::make_report("invariant-factor", "1 - (n k + n + 1) / |S|",
                                                       detail::one_minus(nn * kk + nn + 1, 1, s), s)};
  out.report.trials = 1;
  return out;
}

}  // namespace ffla

#endif  // FFLA_BLACKBOX_PRECONDITIONED_HPP
