#ifndef FFLA_MM_CONFIG_HPP
#define FFLA_MM_CONFIG_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>

#include "ffla/core/errors.hpp"

namespace ffla {

enum class MulAlgorithm { Classic, Fgemm, Strassen };

/// How Strassen-Winograd handles levels beyond what exact integer
/// accumulation allows.
enum class ReductionPolicy {
  /// Levels that fit the overflow bound run reduction-free; above them,
  /// each level reduces its block sums mod p.
  Adaptive,
  /// Every level runs reduction-free; refuses when the bound does not fit.
  Delayed,
};

/// Operation counters. One multiply-accumulate counts one multiplication
/// and one addition, so a classical m x k by k x n product adds 2mkn to
/// field_ops().
struct OpCounter {
  std::uint64_t field_mul = 0;
  std::uint64_t field_add = 0;
  /// Calls to the base-case (leaf) product.
  std::uint64_t base_products = 0;
  /// Scalar multiplications performed inside base-case products.
  std::uint64_t base_multiplications = 0;
  /// Modular reductions of accumulated integer values.
  std::uint64_t reductions = 0;
  /// Largest |z| observed among exact (unreduced) intermediate values.
  std::uint64_t max_abs_intermediate = 0;

  std::uint64_t field_ops() const noexcept { return field_mul + field_add; }

  void mac(std::uint64_t n) noexcept {
    field_mul += n;
    field_add += n;
  }

  void observe(std::uint64_t magnitude) noexcept {
    max_abs_intermediate = std::max(max_abs_intermediate, magnitude);
  }

  OpCounter& operator+=(const OpCounter& o) noexcept {
    field_mul += o.field_mul;
    field_add += o.field_add;
    base_products += o.base_products;
    base_multiplications += o.base_multiplications;
    reductions += o.reductions;
    max_abs_intermediate = std::max(max_abs_intermediate, o.max_abs_intermediate);
    return *this;
  }
};

struct MulConfig {
  /// Exact accumulation holds |sums| < 2^(beta+1).
  unsigned beta = 62;
  /// Strassen recursion stops once min(m, k, n) <= threshold.
  std::size_t strassen_threshold = 64;
  /// Cap on Strassen recursion depth; unset means "as deep as the threshold allows".
  std::optional<unsigned> max_levels;
  unsigned threads = 1;
  MulAlgorithm algorithm = MulAlgorithm::Fgemm;
  ReductionPolicy policy = ReductionPolicy::Adaptive;
  /// Counting is enabled when non-null.
  OpCounter* counter = nullptr;

  void validate() const {
    if (beta < 2 || beta > 62) throw ConfigError("beta must lie in [2, 62], got " + std::to_string(beta));
    if (strassen_threshold < 2) throw ConfigError("strassen_threshold must be at least 2");
    if (threads == 0) throw ConfigError("threads must be positive");
  }
};

}  // namespace ffla

#endif  // FFLA_MM_CONFIG_HPP
