#ifndef FFLA_MM_FGEMM_HPP
#define FFLA_MM_FGEMM_HPP

#include "ffla/mm/kernels.hpp"

namespace ffla {

/// k_max: the largest block depth k with k (p-1)^2 < 2^(beta+1).
inline std::uint64_t fgemm_block_depth(std::uint64_t p, unsigned beta) {
  const auto pm1 = static_cast<unsigned __int128>(p - 1);
  return detail::accumulation_depth(pm1 * pm1, beta);
}

namespace detail {

/// Delayed-reduction product. Odd p runs on centered integers with partial
/// sums reduced every k_max terms. p = 2 has no centered form and runs on
/// {0, 1} with effectively unbounded depth.
inline void fgemm_into(const PrimeField& f, ConstMatrixView a, ConstMatrixView b, MatrixView c, const MulConfig& cfg) {
  require_dims(a.cols() == b.rows() && c.rows() == a.rows() && c.cols() == b.cols(), "gemm: dimension mismatch");
  const std::uint64_t p = f.characteristic();
  const bool centered = p != 2;
  const IntMatrix ai = to_int(f, a, centered);
  const IntMatrix bi = to_int(f, b, centered);
  std::uint64_t depth = fgemm_block_depth(p, cfg.beta);
  IntMatrix out(a.rows(), b.cols());
  int_product(ai.view(), bi.view(), out.view(), static_cast<std::int64_t>(p), depth, cfg.threads, nullptr);
  from_int(f, out.view(), c);
  if (cfg.counter) {
    const std::uint64_t mkn = static_cast<std::uint64_t>(a.rows()) * a.cols() * b.cols();
    cfg.counter->mac(mkn);
    cfg.counter->base_products += 1;
    cfg.counter->base_multiplications += mkn;
    cfg.counter->reductions +=
        static_cast<std::uint64_t>(a.rows()) * b.cols() * reductions_per_entry(a.cols(), depth);
  }
}

}  // namespace detail

/// Finite-field generic multiplication with delayed reduction. The field
/// must have odd characteristic; classic-mode inputs are converted to
/// centered integers internally.
inline DenseMatrix fgemm(const DenseMatrix& a, const DenseMatrix& b, const MulConfig& cfg = {}) {
  cfg.validate();
  detail::require_dims(a.field() == b.field(), "fgemm: operands over different fields");
  detail::require_dims(a.cols() == b.rows(), "fgemm: inner dimensions differ");
  if (a.field().characteristic() % 2 == 0)
    throw ConfigError("fgemm needs an odd prime (centered representation); use the GF(2) kernels for p = 2");
  DenseMatrix c(a.field(), a.rows(), b.cols());
  detail::fgemm_into(a.field(), a.view(), b.view(), c.view(), cfg);
  return c;
}

}  // namespace ffla

#endif  // FFLA_MM_FGEMM_HPP
