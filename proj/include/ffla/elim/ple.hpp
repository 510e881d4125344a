#ifndef FFLA_ELIM_PLE_HPP
#define FFLA_ELIM_PLE_HPP

#include <utility>
#include <vector>

#include "ffla/elim/triangular.hpp"
#include "ffla/matrix/permutation.hpp"

namespace ffla {

/// A = P L E with L (m x r) lower triangular carrying the pivots on its
/// diagonal and E (r x n) in row-echelon form with unit leading entries.
struct PleFactors {
  Permutation P;
  DenseMatrix L;
  DenseMatrix E;
  std::size_t rank = 0;
  /// Column of each leading entry of E, strictly increasing (0-based).
  std::vector<std::size_t> pivot_cols;

  /// Transposition sequence of P: P = T(0, t[0]) T(1, t[1]) ... .
  const std::vector<std::size_t>& transpositions() const { return *P.transpositions(); }

  /// P L E, for checking.
  DenseMatrix reconstruct(const MulConfig& cfg = {}) const { return P.apply_rows(gemm(L, E, cfg)); }
};

namespace detail {

struct PleParts {
  std::vector<std::size_t> piv;
  DenseMatrix L;
  DenseMatrix E;
  std::vector<std::size_t> cols;
};

/// Applies the swaps (i, piv[i]) in order, i.e. P^T from the left.
inline void swap_rows_forward(MatrixView a, const std::vector<std::size_t>& piv) {
  for (std::size_t i = 0; i < piv.size(); ++i)
    if (piv[i] != i) std::swap_ranges(a.row(i).begin(), a.row(i).end(), a.row(piv[i]).begin());
}

inline void copy_block(ConstMatrixView src, MatrixView dst) {
  for (std::size_t i = 0; i < src.rows(); ++i) std::copy(src.row(i).begin(), src.row(i).end(), dst.row(i).begin());
}

inline PleParts ple_rec(const PrimeField& f, ConstMatrixView a, const MulConfig& cfg) {
  const std::size_t m = a.rows(), n = a.cols();
  if (m == 0 || n == 0) return {{}, DenseMatrix(f, m, 0), DenseMatrix(f, 0, n), {}};

  if (n == 1) {
    std::size_t j = 0;
    while (j < m && a(j, 0) == 0) ++j;
    if (j == m) return {{}, DenseMatrix(f, m, 0), DenseMatrix(f, 0, 1), {}};
    DenseMatrix l(f, m, 1);
    for (std::size_t i = 0; i < m; ++i) l(i, 0) = a(i, 0);
    std::swap(l(0, 0), l(j, 0));
    DenseMatrix e(f, 1, 1);
    e(0, 0) = 1;
    return {{j}, std::move(l), std::move(e), {0}};
  }

  const std::size_t n1 = n / 2, n2 = n - n1;
  PleParts left = ple_rec(f, a.cols_range(0, n1), cfg);
  const std::size_t r1 = left.cols.size();

  DenseMatrix a2 = DenseMatrix::from_view(f, a.cols_range(n1, n2));
  swap_rows_forward(a2.view(), left.piv);
  auto a3 = a2.view().rows_range(0, r1);
  auto a4 = a2.view().rows_range(r1, m - r1);
  const auto l11 = left.L.view().rows_range(0, r1);
  auto l12 = left.L.view().rows_range(r1, m - r1);

  trsm_inplace(f, {Side::Left, Uplo::Lower, Diag::NonUnit}, l11, a3, cfg);
  gemm_update(f, f.neg(1), l12, a3, 1, a4, cfg);
  PleParts right = ple_rec(f, a4, cfg);
  const std::size_t r2 = right.cols.size();

  PleParts out{left.piv, DenseMatrix(f, m, r1 + r2), DenseMatrix(f, r1 + r2, n), left.cols};
  for (auto t : right.piv) out.piv.push_back(t + r1);
  for (auto c : right.cols) out.cols.push_back(c + n1);

  swap_rows_forward(l12, right.piv);
  copy_block(left.L.view(), out.L.view().block(0, 0, m, r1));
  copy_block(right.L.view(), out.L.view().block(r1, r1, m - r1, r2));
  copy_block(left.E.view(), out.E.view().block(0, 0, r1, n1));
  copy_block(a3, out.E.view().block(0, n1, r1, n2));
  copy_block(right.E.view(), out.E.view().block(r1, n1, r2, n2));
  return out;
}

}  // namespace detail

/// Recursive PLE: split the columns in halves, factor the left half,
/// eliminate the right half against it, and factor the Schur complement.
inline PleFactors ple(const DenseMatrix& a, const MulConfig& cfg = {}) {
  cfg.validate();
  detail::PleParts parts = detail::ple_rec(a.field(), a.view(), cfg);
  PleFactors out{Permutation::from_transpositions(a.rows(), parts.piv), std::move(parts.L), std::move(parts.E),
                 parts.cols.size(), std::move(parts.cols)};
  return out;
}

}  // namespace ffla

#endif  // FFLA_ELIM_PLE_HPP
