#ifndef FFLA_MATRIX_RANDOM_HPP
#define FFLA_MATRIX_RANDOM_HPP

#include <algorithm>
#include <numeric>
#include <vector>

#include "ffla/matrix/dense_matrix.hpp"

namespace ffla {

/// Rank by plain row reduction on a copy. Slow and simple; used to check
/// generated fixtures.
inline std::size_t naive_rank(const DenseMatrix& a) {
  const PrimeField& f = a.field();
  DenseMatrix w = a;
  std::size_t r = 0;
  for (std::size_t c = 0; c < w.cols() && r < w.rows(); ++c) {
    std::size_t piv = r;
    while (piv < w.rows() && w(piv, c) == 0) ++piv;
    if (piv == w.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < w.cols(); ++j) std::swap(w(piv, j), w(r, j));
    const Element inv = f.inv(w(r, c));
    for (std::size_t i = r + 1; i < w.rows(); ++i) {
      if (w(i, c) == 0) continue;
      const Element s = f.neg(f.mul(w(i, c), inv));
      for (std::size_t j = c; j < w.cols(); ++j) w(i, j) = f.axpy(s, w(r, j), w(i, j));
    }
    ++r;
  }
  return r;
}

/// m x n matrix of rank exactly r: (unit lower m x r) * (echelon r x n with
/// random pivot columns), rows then shuffled.
inline DenseMatrix random_matrix_with_rank(std::size_t m, std::size_t n, std::size_t r, const PrimeField& f,
                                           Rng& rng) {
  if (r > std::min(m, n)) throw DomainError("requested rank exceeds min(rows, cols)");
  DenseMatrix lower(f, m, r);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < r && j <= i; ++j) lower(i, j) = (i == j) ? 1 : f.random(rng);

  std::vector<std::size_t> cols(n);
  std::iota(cols.begin(), cols.end(), std::size_t{0});
  for (std::size_t i = 0; i < r; ++i) std::swap(cols[i], cols[i + rng.uniform(n - i)]);
  cols.resize(r);
  std::sort(cols.begin(), cols.end());

  DenseMatrix ech(f, r, n);
  for (std::size_t i = 0; i < r; ++i) {
    ech(i, cols[i]) = 1;
    for (std::size_t j = cols[i] + 1; j < n; ++j) ech(i, j) = f.random(rng);
  }

  DenseMatrix prod(f, m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t t = 0; t < r; ++t) {
      const Element l = lower(i, t);
      if (l == 0) continue;
      for (std::size_t j = 0; j < n; ++j) prod(i, j) = f.axpy(l, ech(t, j), prod(i, j));
    }

  std::vector<std::size_t> perm(m);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  for (std::size_t i = m; i > 1; --i) std::swap(perm[i - 1], perm[rng.uniform(i)]);
  DenseMatrix out(f, m, n);
  for (std::size_t i = 0; i < m; ++i) {
    auto src = prod.row(perm[i]);
    std::copy(src.begin(), src.end(), out.row(i).begin());
  }

  if (naive_rank(out) != r) throw std::logic_error("random_matrix_with_rank: rank check failed");
  return out;
}

inline DenseMatrix random_matrix_with_rank(std::size_t m, std::size_t n, std::size_t r, const PrimeField& f,
                                           std::uint64_t seed) {
  Rng rng(seed);
  return random_matrix_with_rank(m, n, r, f, rng);
}

/// Uniformly random nonsingular n x n matrix (rejection sampling).
inline DenseMatrix random_nonsingular(std::size_t n, const PrimeField& f, Rng& rng) {
  for (;;) {
    DenseMatrix a = DenseMatrix::random(f, n, n, rng);
    if (naive_rank(a) == n) return a;
  }
}

}  // namespace ffla

#endif  // FFLA_MATRIX_RANDOM_HPP
