#ifndef FFLA_ELIM_DERIVED_HPP
#define FFLA_ELIM_DERIVED_HPP

#include <optional>

#include "ffla/elim/echelon.hpp"

namespace ffla {

inline std::size_t rank(const DenseMatrix& a, const MulConfig& cfg = {}) { return ple(a, cfg).rank; }

/// sign(P) times the product of the pivots on the diagonal of L.
inline Element determinant(const DenseMatrix& a, const MulConfig& cfg = {}) {
  detail::require_dims(a.square(), "determinant of a non-square matrix");
  const PrimeField& f = a.field();
  const PleFactors p = ple(a, cfg);
  if (p.rank < a.rows()) return 0;
  Element d = 1;
  for (std::size_t i = 0; i < p.rank; ++i) d = f.mul(d, p.L(i, i));
  std::size_t swaps = 0;
  for (std::size_t i = 0; i < p.transpositions().size(); ++i) swaps += p.transpositions()[i] != i;
  return swaps % 2 ? f.neg(d) : d;
}

/// A^-1 = E^-1 L^-1 P^T.
inline DenseMatrix inverse(const DenseMatrix& a, const MulConfig& cfg = {}) {
  detail::require_dims(a.square(), "inverse of a non-square matrix");
  const PrimeField& f = a.field();
  PleFactors p = ple(a, cfg);
  if (p.rank < a.rows()) throw SingularError("matrix is singular (rank " + std::to_string(p.rank) + ")");
  trtri_inplace(f, Uplo::Upper, Diag::Unit, p.E.view(), cfg);
  trtri_inplace(f, Uplo::Lower, Diag::NonUnit, p.L.view(), cfg);
  return p.P.apply_cols_transpose(trtrm(p.E, p.L, Diag::Unit, Diag::NonUnit, cfg));
}

/// Outcome of solve(): a particular solution, or the reason there is none.
struct SolveResult {
  bool consistent = false;
  std::optional<Vector> x;
  std::size_t rank = 0;
  /// Index (within P^T b) of the first equation that cannot be satisfied.
  std::optional<std::size_t> inconsistent_row;
};

/// Some x with A x = b (free variables set to zero), or an inconsistency report.
inline SolveResult solve(const DenseMatrix& a, std::span<const Element> b, const MulConfig& cfg = {}) {
  detail::require_dims(b.size() == a.rows(), "solve: right-hand side length differs from row count");
  const PrimeField& f = a.field();
  const PleFactors p = ple(a, cfg);
  const std::size_t m = a.rows(), n = a.cols(), r = p.rank;

  const Vector pb = p.P.apply_transpose(Vector(b.begin(), b.end()));
  DenseMatrix c(f, m, 1);
  for (std::size_t i = 0; i < m; ++i) c(i, 0) = pb[i];
  auto c1 = c.view().rows_range(0, r);
  auto c2 = c.view().rows_range(r, m - r);
  trsm_inplace(f, {Side::Left, Uplo::Lower, Diag::NonUnit}, p.L.view().rows_range(0, r), c1, cfg);
  gemm_update(f, f.neg(1), p.L.view().rows_range(r, m - r), c1, 1, c2, cfg);

  SolveResult out;
  out.rank = r;
  for (std::size_t i = 0; i < c2.rows(); ++i)
    if (c2(i, 0) != 0) {
      out.inconsistent_row = r + i;
      return out;
    }

  // E x = y with the free variables at zero: U1 x_pivots = y.
  DenseMatrix u1(f, r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) u1(i, j) = p.E(i, p.pivot_cols[j]);
  trsm_inplace(f, {Side::Left, Uplo::Upper, Diag::Unit}, u1.view(), c1, cfg);
  Vector x(n, 0);
  for (std::size_t i = 0; i < r; ++i) x[p.pivot_cols[i]] = c1(i, 0);
  out.consistent = true;
  out.x = std::move(x);
  return out;
}

/// Columns form a basis of {x : A x = 0}: N = Q [-U1^-1 U2; I].
inline DenseMatrix nullspace_basis(const DenseMatrix& a, const MulConfig& cfg = {}) {
  const PrimeField& f = a.field();
  const PleFactors p = ple(a, cfg);
  const std::size_t n = a.cols(), r = p.rank;
  const auto order = pivot_first_order(n, p.pivot_cols);
  DenseMatrix u1(f, r, r), w(f, r, n - r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) u1(i, j) = p.E(i, order[j]);
    for (std::size_t j = r; j < n; ++j) w(i, j - r) = p.E(i, order[j]);
  }
  trsm_inplace(f, {Side::Left, Uplo::Upper, Diag::Unit}, u1.view(), w.view(), cfg);
  DenseMatrix nb(f, n, n - r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < n - r; ++j) nb(order[i], j) = f.neg(w(i, j));
  for (std::size_t j = 0; j < n - r; ++j) nb(order[r + j], j) = 1;
  return nb;
}

}  // namespace ffla

#endif  // FFLA_ELIM_DERIVED_HPP
