#ifndef FFLA_MM_CLASSIC_HPP
#define FFLA_MM_CLASSIC_HPP

#include "ffla/mm/kernels.hpp"

namespace ffla {

namespace detail {

/// c = a * b, one field multiply-accumulate per term. Reference kernel.
inline void classic_into(const PrimeField& f, ConstMatrixView a, ConstMatrixView b, MatrixView c, OpCounter* counter) {
  require_dims(a.cols() == b.rows() && c.rows() == a.rows() && c.cols() == b.cols(), "gemm: dimension mismatch");
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Element acc = 0;
      for (std::size_t l = 0; l < a.cols(); ++l) acc = f.axpy(a(i, l), b(l, j), acc);
      c(i, j) = acc;
    }
  }
  if (counter) {
    const std::uint64_t mkn = static_cast<std::uint64_t>(a.rows()) * a.cols() * b.cols();
    counter->mac(mkn);
    counter->base_products += 1;
    counter->base_multiplications += mkn;
  }
}

}  // namespace detail

inline DenseMatrix gemm_classic(const DenseMatrix& a, const DenseMatrix& b, OpCounter* counter = nullptr) {
  detail::require_dims(a.field() == b.field(), "gemm: operands over different fields");
  detail::require_dims(a.cols() == b.rows(), "gemm: inner dimensions differ");
  DenseMatrix c(a.field(), a.rows(), b.cols());
  detail::classic_into(a.field(), a.view(), b.view(), c.view(), counter);
  return c;
}

}  // namespace ffla

#endif  // FFLA_MM_CLASSIC_HPP
