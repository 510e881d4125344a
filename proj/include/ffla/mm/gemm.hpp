#ifndef FFLA_MM_GEMM_HPP
#define FFLA_MM_GEMM_HPP

#include "ffla/mm/classic.hpp"
#include "ffla/mm/fgemm.hpp"
#include "ffla/mm/strassen.hpp"

namespace ffla {

namespace detail {

inline void product_into(const PrimeField& f, ConstMatrixView a, ConstMatrixView b, MatrixView c,
                         const MulConfig& cfg) {
  if (c.empty()) return;
  if (a.cols() == 0) {
    for (std::size_t i = 0; i < c.rows(); ++i)
      for (auto& v : c.row(i)) v = 0;
    return;
  }
  switch (cfg.algorithm) {
    case MulAlgorithm::Classic:
      classic_into(f, a, b, c, cfg.counter);
      return;
    case MulAlgorithm::Fgemm:
      fgemm_into(f, a, b, c, cfg);
      return;
    case MulAlgorithm::Strassen:
      strassen_into(f, a, b, c, cfg);
      return;
  }
}

}  // namespace detail

/// c = alpha * a * b + beta * c, all views holding canonical elements of f.
inline void gemm_update(const PrimeField& f, Element alpha, ConstMatrixView a, ConstMatrixView b, Element beta,
                        MatrixView c, const MulConfig& cfg) {
  detail::require_dims(a.cols() == b.rows() && c.rows() == a.rows() && c.cols() == b.cols(),
                       "gemm: dimension mismatch");
  if (c.empty()) return;
  DenseMatrix t(f, c.rows(), c.cols());
  detail::product_into(f, a, b, t.view(), cfg);
  const Element minus_one = f.neg(1);
  for (std::size_t i = 0; i < c.rows(); ++i) {
    auto tr = t.row(i);
    auto cr = c.row(i);
    for (std::size_t j = 0; j < c.cols(); ++j) {
      Element x = tr[j];
      if (alpha != 1) x = alpha == minus_one ? f.neg(x) : f.mul(alpha, x);
      if (beta == 1) {
        x = f.add(x, cr[j]);
      } else if (beta != 0) {
        x = f.axpy(beta, cr[j], x);
      }
      cr[j] = x;
    }
  }
  if (cfg.counter) {
    const std::uint64_t mn = static_cast<std::uint64_t>(c.rows()) * c.cols();
    if (beta != 0) cfg.counter->field_add += mn;
    if (alpha != 1 && alpha != minus_one) cfg.counter->field_mul += mn;
    if (beta != 0 && beta != 1 && beta != minus_one) cfg.counter->field_mul += mn;
  }
}

/// Product by the algorithm named in cfg.
inline DenseMatrix gemm(const DenseMatrix& a, const DenseMatrix& b, const MulConfig& cfg = {}) {
  cfg.validate();
  detail::require_dims(a.field() == b.field(), "gemm: operands over different fields");
  detail::require_dims(a.cols() == b.rows(), "gemm: inner dimensions differ");
  DenseMatrix c(a.field(), a.rows(), b.cols());
  detail::product_into(a.field(), a.view(), b.view(), c.view(), cfg);
  return c;
}

}  // namespace ffla

#endif  // FFLA_MM_GEMM_HPP
