#ifndef FFLA_ELIM_TRIANGULAR_HPP
#define FFLA_ELIM_TRIANGULAR_HPP

#include <algorithm>

#include "ffla/mm/gemm.hpp"

namespace ffla {

enum class Side { Left, Right };
enum class Uplo { Upper, Lower };
enum class Diag { Unit, NonUnit };

/// Which triangle of the operand is read and where it multiplies.
/// Only the referenced triangle is read; Unit never reads the diagonal.
struct TriangularSpec {
  Side side = Side::Left;
  Uplo uplo = Uplo::Upper;
  Diag diag = Diag::NonUnit;
};

namespace detail {

inline void scale_block(const PrimeField& f, Element s, MatrixView b, const MulConfig& cfg) {
  if (s == 1) return;
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (auto& v : b.row(i)) v = f.mul(s, v);
  if (cfg.counter) cfg.counter->field_mul += static_cast<std::uint64_t>(b.rows()) * b.cols();
}

inline void negate_block(const PrimeField& f, MatrixView b) {
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (auto& v : b.row(i)) v = f.neg(v);
}

inline Element pivot_inverse(const PrimeField& f, Element d, const MulConfig& cfg) {
  if (d == 0) throw SingularError("triangular operand has a zero diagonal entry");
  if (cfg.counter) ++cfg.counter->field_mul;
  return f.inv(d);
}

}  // namespace detail

/// Solves op(A) X = B (left) or X op(A) = B (right) in place of B.
inline void trsm_inplace(const PrimeField& f, TriangularSpec s, ConstMatrixView a, MatrixView b,
                         const MulConfig& cfg = {}) {
  const std::size_t t = a.rows();
  detail::require_dims(a.cols() == t, "trsm: triangle must be square");
  detail::require_dims((s.side == Side::Left ? b.rows() : b.cols()) == t, "trsm: dimension mismatch");
  if (t == 0 || b.empty()) {
    if (s.diag == Diag::NonUnit)
      for (std::size_t i = 0; i < t; ++i)
        if (a(i, i) == 0) throw SingularError("triangular operand has a zero diagonal entry");
    return;
  }
  if (t == 1) {
    if (s.diag == Diag::NonUnit) detail::scale_block(f, detail::pivot_inverse(f, a(0, 0), cfg), b, cfg);
    return;
  }
  const std::size_t h = t / 2;
  const Element m1 = f.neg(1);
  const auto a1 = a.block(0, 0, h, h);
  const auto a3 = a.block(h, h, t - h, t - h);
  if (s.side == Side::Left) {
    auto b1 = b.rows_range(0, h);
    auto b2 = b.rows_range(h, t - h);
    if (s.uplo == Uplo::Upper) {
      trsm_inplace(f, s, a3, b2, cfg);
      gemm_update(f, m1, a.block(0, h, h, t - h), b2, 1, b1, cfg);
      trsm_inplace(f, s, a1, b1, cfg);
    } else {
      trsm_inplace(f, s, a1, b1, cfg);
      gemm_update(f, m1, a.block(h, 0, t - h, h), b1, 1, b2, cfg);
      trsm_inplace(f, s, a3, b2, cfg);
    }
  } else {
    auto b1 = b.cols_range(0, h);
    auto b2 = b.cols_range(h, t - h);
    if (s.uplo == Uplo::Upper) {
      trsm_inplace(f, s, a1, b1, cfg);
      gemm_update(f, m1, b1, a.block(0, h, h, t - h), 1, b2, cfg);
      trsm_inplace(f, s, a3, b2, cfg);
    } else {
      trsm_inplace(f, s, a3, b2, cfg);
      gemm_update(f, m1, b2, a.block(h, 0, t - h, h), 1, b1, cfg);
      trsm_inplace(f, s, a1, b1, cfg);
    }
  }
}

/// B <- op(A) B (left) or B op(A) (right).
inline void trmm_inplace(const PrimeField& f, TriangularSpec s, ConstMatrixView a, MatrixView b,
                         const MulConfig& cfg = {}) {
  const std::size_t t = a.rows();
  detail::require_dims(a.cols() == t, "trmm: triangle must be square");
  detail::require_dims((s.side == Side::Left ? b.rows() : b.cols()) == t, "trmm: dimension mismatch");
  if (t == 0 || b.empty()) return;
  if (t == 1) {
    if (s.diag == Diag::NonUnit) detail::scale_block(f, a(0, 0), b, cfg);
    return;
  }
  const std::size_t h = t / 2;
  const auto a1 = a.block(0, 0, h, h);
  const auto a3 = a.block(h, h, t - h, t - h);
  if (s.side == Side::Left) {
    auto b1 = b.rows_range(0, h);
    auto b2 = b.rows_range(h, t - h);
    if (s.uplo == Uplo::Upper) {
      trmm_inplace(f, s, a1, b1, cfg);
      gemm_update(f, 1, a.block(0, h, h, t - h), b2, 1, b1, cfg);
      trmm_inplace(f, s, a3, b2, cfg);
    } else {
      trmm_inplace(f, s, a3, b2, cfg);
      gemm_update(f, 1, a.block(h, 0, t - h, h), b1, 1, b2, cfg);
      trmm_inplace(f, s, a1, b1, cfg);
    }
  } else {
    auto b1 = b.cols_range(0, h);
    auto b2 = b.cols_range(h, t - h);
    if (s.uplo == Uplo::Upper) {
      trmm_inplace(f, s, a3, b2, cfg);
      gemm_update(f, 1, b1, a.block(0, h, h, t - h), 1, b2, cfg);
      trmm_inplace(f, s, a1, b1, cfg);
    } else {
      trmm_inplace(f, s, a1, b1, cfg);
      gemm_update(f, 1, b2, a.block(h, 0, t - h, h), 1, b1, cfg);
      trmm_inplace(f, s, a3, b2, cfg);
    }
  }
}

/// Inverts the referenced triangle of A in place. The opposite triangle is
/// left untouched, as is the diagonal in Unit mode.
inline void trtri_inplace(const PrimeField& f, Uplo uplo, Diag diag, MatrixView a, const MulConfig& cfg = {}) {
  const std::size_t t = a.rows();
  detail::require_dims(a.cols() == t, "trtri: matrix must be square");
  if (t == 0) return;
  if (t == 1) {
    if (diag == Diag::NonUnit) a(0, 0) = detail::pivot_inverse(f, a(0, 0), cfg);
    return;
  }
  const std::size_t h = t / 2;
  auto c1 = a.block(0, 0, h, h);
  auto c3 = a.block(h, h, t - h, t - h);
  trtri_inplace(f, uplo, diag, c1, cfg);
  trtri_inplace(f, uplo, diag, c3, cfg);
  if (uplo == Uplo::Upper) {
    auto c2 = a.block(0, h, h, t - h);
    trmm_inplace(f, {Side::Right, Uplo::Upper, diag}, c3, c2, cfg);
    trmm_inplace(f, {Side::Left, Uplo::Upper, diag}, c1, c2, cfg);
    detail::negate_block(f, c2);
  } else {
    auto c2 = a.block(h, 0, t - h, h);
    trmm_inplace(f, {Side::Right, Uplo::Lower, diag}, c1, c2, cfg);
    trmm_inplace(f, {Side::Left, Uplo::Lower, diag}, c3, c2, cfg);
    detail::negate_block(f, c2);
  }
}

/// out <- U L for upper U and lower L, both t x t; out must not alias either.
inline void trtrm_into(const PrimeField& f, ConstMatrixView u, Diag du, ConstMatrixView l, Diag dl, MatrixView out,
                       const MulConfig& cfg = {}) {
  const std::size_t t = u.rows();
  detail::require_dims(u.cols() == t && l.rows() == t && l.cols() == t && out.rows() == t && out.cols() == t,
                       "trtrm: operands must be square of equal size");
  if (t == 0) return;
  if (t == 1) {
    const Element x = du == Diag::Unit ? 1 : u(0, 0);
    const Element y = dl == Diag::Unit ? 1 : l(0, 0);
    out(0, 0) = f.mul(x, y);
    if (cfg.counter && du == Diag::NonUnit && dl == Diag::NonUnit) ++cfg.counter->field_mul;
    return;
  }
  const std::size_t h = t / 2, g = t - h;
  const auto u1 = u.block(0, 0, h, h), u2 = u.block(0, h, h, g), u3 = u.block(h, h, g, g);
  const auto l1 = l.block(0, 0, h, h), l2 = l.block(h, 0, g, h), l3 = l.block(h, h, g, g);
  auto a1 = out.block(0, 0, h, h), a2 = out.block(0, h, h, g);
  auto a3 = out.block(h, 0, g, h), a4 = out.block(h, h, g, g);

  trtrm_into(f, u1, du, l1, dl, a1, cfg);
  gemm_update(f, 1, u2, l2, 1, a1, cfg);
  for (std::size_t i = 0; i < h; ++i) std::copy(u2.row(i).begin(), u2.row(i).end(), a2.row(i).begin());
  trmm_inplace(f, {Side::Right, Uplo::Lower, dl}, l3, a2, cfg);
  for (std::size_t i = 0; i < g; ++i) std::copy(l2.row(i).begin(), l2.row(i).end(), a3.row(i).begin());
  trmm_inplace(f, {Side::Left, Uplo::Upper, du}, u3, a3, cfg);
  trtrm_into(f, u3, du, l3, dl, a4, cfg);
}

/// Copy of the referenced triangle with explicit zeros (and ones on the
/// diagonal in Unit mode).
inline DenseMatrix triangle_of(const DenseMatrix& a, Uplo uplo, Diag diag) {
  detail::require_dims(a.rows() == a.cols(), "triangle of a non-square matrix");
  DenseMatrix r(a.field(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (i == j)
        r(i, j) = diag == Diag::Unit ? 1 : a(i, j);
      else if ((uplo == Uplo::Upper) == (j > i))
        r(i, j) = a(i, j);
    }
  return r;
}

inline DenseMatrix trsm(TriangularSpec s, const DenseMatrix& a, const DenseMatrix& b, const MulConfig& cfg = {}) {
  detail::require_dims(a.field() == b.field(), "trsm: operands over different fields");
  DenseMatrix x = b;
  trsm_inplace(a.field(), s, a.view(), x.view(), cfg);
  return x;
}

inline DenseMatrix trmm(TriangularSpec s, const DenseMatrix& a, const DenseMatrix& b, const MulConfig& cfg = {}) {
  detail::require_dims(a.field() == b.field(), "trmm: operands over different fields");
  DenseMatrix c = b;
  trmm_inplace(a.field(), s, a.view(), c.view(), cfg);
  return c;
}

/// Inverse of the referenced triangle, returned as a clean triangular matrix.
inline DenseMatrix trtri(const DenseMatrix& a, Uplo uplo, Diag diag, const MulConfig& cfg = {}) {
  DenseMatrix c = triangle_of(a, uplo, diag);
  trtri_inplace(a.field(), uplo, diag, c.view(), cfg);
  return c;
}

inline DenseMatrix trtrm(const DenseMatrix& u, const DenseMatrix& l, Diag du = Diag::NonUnit,
                         Diag dl = Diag::NonUnit, const MulConfig& cfg = {}) {
  detail::require_dims(u.field() == l.field(), "trtrm: operands over different fields");
  DenseMatrix a(u.field(), u.rows(), u.cols());
  trtrm_into(u.field(), u.view(), du, l.view(), dl, a.view(), cfg);
  return a;
}

}  // namespace ffla

#endif  // FFLA_ELIM_TRIANGULAR_HPP
