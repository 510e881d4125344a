#ifndef FFLA_ELIM_ECHELON_HPP
#define FFLA_ELIM_ECHELON_HPP

#include "ffla/elim/ple.hpp"

namespace ffla {

/// X A = E with X nonsingular (m x m) and E (m x n) in row-echelon form;
/// the last m - rank rows of E are zero.
struct EchelonForm {
  DenseMatrix X;
  DenseMatrix E;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
};

/// Y A = R with Y nonsingular and R in reduced row-echelon form.
struct ReducedEchelonForm {
  DenseMatrix Y;
  DenseMatrix R;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
};

namespace detail {

struct EchelonParts {
  PleFactors f;
  DenseMatrix x1;  // L1^-1, r x r lower
  DenseMatrix x2;  // -L2 L1^-1, (m - r) x r
};

inline EchelonParts echelon_parts(const DenseMatrix& a, const MulConfig& cfg) {
  const PrimeField& fld = a.field();
  PleFactors f = ple(a, cfg);
  const std::size_t m = a.rows(), r = f.rank;
  DenseMatrix x1 = DenseMatrix::from_view(fld, f.L.view().rows_range(0, r));
  trtri_inplace(fld, Uplo::Lower, Diag::NonUnit, x1.view(), cfg);
  DenseMatrix x2 = DenseMatrix::from_view(fld, f.L.view().rows_range(r, m - r));
  trmm_inplace(fld, {Side::Right, Uplo::Lower, Diag::NonUnit}, x1.view(), x2.view(), cfg);
  negate_block(fld, x2.view());
  return {std::move(f), std::move(x1), std::move(x2)};
}

/// [[top, 0], [bottom, I]] P^T for top r x r, bottom (m - r) x r.
inline DenseMatrix assemble_transform(const DenseMatrix& top, const DenseMatrix& bottom, const Permutation& p) {
  const PrimeField& fld = top.field();
  const std::size_t r = top.rows(), m = r + bottom.rows();
  DenseMatrix t(fld, m, m);
  copy_block(top.view(), t.view().block(0, 0, r, r));
  copy_block(bottom.view(), t.view().block(r, 0, m - r, r));
  for (std::size_t i = r; i < m; ++i) t(i, i) = 1;
  return p.apply_cols_transpose(t);
}

}  // namespace detail

inline EchelonForm row_echelon(const DenseMatrix& a, const MulConfig& cfg = {}) {
  auto parts = detail::echelon_parts(a, cfg);
  const std::size_t r = parts.f.rank;
  EchelonForm out{detail::assemble_transform(parts.x1, parts.x2, parts.f.P), DenseMatrix(a.field(), a.rows(), a.cols()),
                  r, parts.f.pivot_cols};
  detail::copy_block(parts.f.E.view(), out.E.view().rows_range(0, r));
  return out;
}

/// Column permutation moving the pivot columns to the front, in order,
/// followed by the remaining columns in order: (E Q) = [U1 U2].
inline std::vector<std::size_t> pivot_first_order(std::size_t n, const std::vector<std::size_t>& pivots) {
  std::vector<std::size_t> order(pivots);
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) order.push_back(c);
  return order;
}

inline ReducedEchelonForm reduced_row_echelon(const DenseMatrix& a, const MulConfig& cfg = {}) {
  const PrimeField& fld = a.field();
  auto parts = detail::echelon_parts(a, cfg);
  const std::size_t r = parts.f.rank, n = a.cols();
  const auto order = pivot_first_order(n, parts.f.pivot_cols);

  // U1^-1 (unit upper) and U1^-1 U2.
  DenseMatrix u1(fld, r, r), u2(fld, r, n - r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) u1(i, j) = parts.f.E(i, order[j]);
    for (std::size_t j = r; j < n; ++j) u2(i, j - r) = parts.f.E(i, order[j]);
  }
  trtri_inplace(fld, Uplo::Upper, Diag::Unit, u1.view(), cfg);
  trmm_inplace(fld, {Side::Left, Uplo::Upper, Diag::Unit}, u1.view(), u2.view(), cfg);
  DenseMatrix y1 = trtrm(u1, parts.x1, Diag::Unit, Diag::NonUnit, cfg);

  ReducedEchelonForm out{detail::assemble_transform(y1, parts.x2, parts.f.P), DenseMatrix(fld, a.rows(), n), r,
                         parts.f.pivot_cols};
  for (std::size_t i = 0; i < r; ++i) {
    out.R(i, order[i]) = 1;
    for (std::size_t j = r; j < n; ++j) out.R(i, order[j]) = u2(i, j - r);
  }
  return out;
}

}  // namespace ffla

#endif  // FFLA_ELIM_ECHELON_HPP
