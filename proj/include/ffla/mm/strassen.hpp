#ifndef FFLA_MM_STRASSEN_HPP
#define FFLA_MM_STRASSEN_HPP

#include <climits>
#include <string>

#include "ffla/field/factor.hpp"
#include "ffla/mm/kernels.hpp"

namespace ffla {

/// Worst-case |z| over every intermediate value of l recursive
/// Strassen-Winograd levels on entries in [0, p-1]:
/// ((1 + 3^l) / 2)^2 * floor(k / 2^l) * (p - 1)^2. For l = 0 this is the
/// classical k (p - 1)^2.
inline BigInt strassen_bound(std::uint64_t p, std::uint64_t k, unsigned l) {
  const BigInt pm1 = BigInt(p) - 1;
  if (l == 0) return BigInt(k) * pm1 * pm1;
  const BigInt half = (1 + boost::multiprecision::pow(BigInt(3), l)) / 2;
  const BigInt depth = BigInt(k) >> l;
  return half * half * depth * pm1 * pm1;
}

/// Largest l with 2^l <= k whose bound stays below 2^(beta+1).
inline unsigned max_strassen_levels(std::uint64_t p, std::uint64_t k, unsigned beta) {
  const BigInt cap = BigInt(1) << (beta + 1);
  unsigned l = 0;
  while (l + 1 < 64 && (std::uint64_t{1} << (l + 1)) <= k && strassen_bound(p, k, l + 1) < cap) ++l;
  return l;
}

namespace detail {

/// Recursion depth actually taken: halve while levels remain and every
/// dimension is above the threshold.
inline unsigned planned_levels(std::size_t m, std::size_t k, std::size_t n, unsigned levels, std::size_t threshold) {
  unsigned l = 0;
  while (l < levels && std::min({m, k, n}) > threshold) {
    m /= 2;
    k /= 2;
    n /= 2;
    ++l;
  }
  return l;
}

class StrassenRunner {
 public:
  StrassenRunner(std::uint64_t p, const MulConfig& cfg)
      : p_(static_cast<std::int64_t>(p)), cfg_(cfg), cap_(BigInt(1) << (cfg.beta + 1)) {
    const auto pm1 = static_cast<unsigned __int128>(p - 1);
    // Reduced-mode leaves restart from a carry below p after every block.
    std::uint64_t d = accumulation_depth(pm1 * pm1, cfg.beta);
    if (d != kNeverReduce && pm1 != 0) {
      const auto room = static_cast<unsigned __int128>(INT64_MAX - p_) / (pm1 * pm1);
      if (room < d) d = static_cast<std::uint64_t>(room);
    }
    leaf_depth_ = d;
  }

  /// c = a * b with a, b classic. Output classic.
  void run(ConstMatrixView a, ConstMatrixView b, MatrixView c, unsigned levels) {
    reduced(a, b, c, levels);
  }

 private:
  OpCounter* counter() const { return cfg_.counter; }

  void observe(ConstMatrixView x) {
    if (!counter()) return;
    for (std::size_t i = 0; i < x.rows(); ++i)
      for (auto v : x.row(i)) counter()->observe(magnitude(v));
  }

  void count_leaf(std::size_t m, std::size_t k, std::size_t n, std::uint64_t depth) {
    if (!counter()) return;
    const std::uint64_t mkn = static_cast<std::uint64_t>(m) * k * n;
    counter()->mac(mkn);
    counter()->base_products += 1;
    counter()->base_multiplications += mkn;
    counter()->reductions += static_cast<std::uint64_t>(m) * n * reductions_per_entry(k, depth);
  }

  void normalize(MatrixView c) {
    for (std::size_t i = 0; i < c.rows(); ++i)
      for (auto& v : c.row(i)) {
        v %= p_;
        if (v < 0) v += p_;
      }
  }

  // Inputs and output in [0, p-1].
  void reduced(ConstMatrixView a, ConstMatrixView b, MatrixView c, unsigned levels) {
    const unsigned l = planned_levels(a.rows(), a.cols(), b.cols(), levels, cfg_.strassen_threshold);
    if (l == 0) {
      int_product(a, b, c, p_, leaf_depth_, cfg_.threads, nullptr);
      normalize(c);
      count_leaf(a.rows(), a.cols(), b.cols(), leaf_depth_);
      return;
    }
    if (strassen_bound(static_cast<std::uint64_t>(p_), a.cols(), l) < cap_) {
      exact(a, b, c, l);
      normalize(c);
      if (counter()) counter()->reductions += static_cast<std::uint64_t>(c.rows()) * c.cols();
      return;
    }
    if (cfg_.policy == ReductionPolicy::Delayed) {
      throw ConfigError("Strassen-Winograd with " + std::to_string(l) + " levels at k = " +
                        std::to_string(a.cols()) + " exceeds the exact accumulation bound 2^" +
                        std::to_string(cfg_.beta + 1));
    }
    level(a, b, c, l, false);
  }

  // Exact integer product; the caller has checked the bound for l levels.
  void exact(ConstMatrixView a, ConstMatrixView b, MatrixView c, unsigned levels) {
    const unsigned l = planned_levels(a.rows(), a.cols(), b.cols(), levels, cfg_.strassen_threshold);
    if (l == 0) {
      std::uint64_t* track = counter() ? &counter()->max_abs_intermediate : nullptr;
      int_product(a, b, c, p_, kNeverReduce, cfg_.threads, track);
      count_leaf(a.rows(), a.cols(), b.cols(), kNeverReduce);
      return;
    }
    level(a, b, c, l, true);
  }

  // z = x + sign * y, exact or reduced into [0, p-1].
  void combine(ConstMatrixView x, ConstMatrixView y, MatrixView z, int sign, bool pure) {
    for (std::size_t i = 0; i < z.rows(); ++i) {
      auto xr = x.row(i);
      auto yr = y.row(i);
      auto zr = z.row(i);
      for (std::size_t j = 0; j < z.cols(); ++j) {
        std::int64_t v = sign > 0 ? xr[j] + yr[j] : xr[j] - yr[j];
        if (!pure) {
          if (v >= p_) v -= p_;
          if (v < 0) v += p_;
        }
        zr[j] = v;
      }
    }
    if (counter()) {
      counter()->field_add += static_cast<std::uint64_t>(z.rows()) * z.cols();
      if (pure) observe(z);
    }
  }

  void recurse(ConstMatrixView a, ConstMatrixView b, MatrixView c, unsigned levels, bool pure) {
    if (pure) {
      exact(a, b, c, levels);
      observe(c);
    } else {
      reduced(a, b, c, levels);
    }
  }

  // One Winograd level over the even part, then peel odd rows/columns.
  void level(ConstMatrixView a, ConstMatrixView b, MatrixView c, unsigned l, bool pure) {
    const std::size_t m = a.rows(), k = a.cols(), n = b.cols();
    const std::size_t m2 = m / 2, k2 = k / 2, n2 = n / 2;
    const auto a11 = a.block(0, 0, m2, k2), a12 = a.block(0, k2, m2, k2);
    const auto a21 = a.block(m2, 0, m2, k2), a22 = a.block(m2, k2, m2, k2);
    const auto b11 = b.block(0, 0, k2, n2), b12 = b.block(0, n2, k2, n2);
    const auto b21 = b.block(k2, 0, k2, n2), b22 = b.block(k2, n2, k2, n2);
    auto c11 = c.block(0, 0, m2, n2), c12 = c.block(0, n2, m2, n2);
    auto c21 = c.block(m2, 0, m2, n2), c22 = c.block(m2, n2, m2, n2);

    IntMatrix s1(m2, k2), s2(m2, k2), s3(m2, k2), s4(m2, k2);
    IntMatrix t1(k2, n2), t2(k2, n2), t3(k2, n2), t4(k2, n2);
    combine(a21, a22, s1.view(), +1, pure);
    combine(s1.view(), a11, s2.view(), -1, pure);
    combine(a11, a21, s3.view(), -1, pure);
    combine(a12, s2.view(), s4.view(), -1, pure);
    combine(b12, b11, t1.view(), -1, pure);
    combine(b22, t1.view(), t2.view(), -1, pure);
    combine(b22, b12, t3.view(), -1, pure);
    combine(t2.view(), b21, t4.view(), -1, pure);

    IntMatrix p1(m2, n2), p2(m2, n2), p3(m2, n2), p4(m2, n2), p5(m2, n2), p6(m2, n2), p7(m2, n2);
    recurse(a11, b11, p1.view(), l - 1, pure);
    recurse(a12, b21, p2.view(), l - 1, pure);
    recurse(s4.view(), b22, p3.view(), l - 1, pure);
    recurse(a22, t4.view(), p4.view(), l - 1, pure);
    recurse(s1.view(), t1.view(), p5.view(), l - 1, pure);
    recurse(s2.view(), t2.view(), p6.view(), l - 1, pure);
    recurse(s3.view(), t3.view(), p7.view(), l - 1, pure);

    IntMatrix u2(m2, n2), u3(m2, n2), u4(m2, n2);
    combine(p1.view(), p2.view(), c11, +1, pure);
    combine(p1.view(), p6.view(), u2.view(), +1, pure);
    combine(u2.view(), p7.view(), u3.view(), +1, pure);
    combine(u2.view(), p5.view(), u4.view(), +1, pure);
    combine(u4.view(), p3.view(), c12, +1, pure);
    combine(u3.view(), p4.view(), c21, -1, pure);
    combine(u3.view(), p5.view(), c22, +1, pure);

    peel(a, b, c, pure);
  }

  std::int64_t settle(__int128 v, bool pure) const {
    if (pure) return static_cast<std::int64_t>(v);
    auto r = static_cast<std::int64_t>(v % p_);
    return r < 0 ? r + p_ : r;
  }

  void peel(ConstMatrixView a, ConstMatrixView b, MatrixView c, bool pure) {
    const std::size_t m = a.rows(), k = a.cols(), n = b.cols();
    const std::size_t me = m - m % 2, ke = k - k % 2, ne = n - n % 2;
    std::uint64_t macs = 0;
    if (k % 2) {
      for (std::size_t i = 0; i < me; ++i)
        for (std::size_t j = 0; j < ne; ++j)
          c(i, j) = settle(static_cast<__int128>(c(i, j)) + static_cast<__int128>(a(i, ke)) * b(ke, j), pure);
      macs += static_cast<std::uint64_t>(me) * ne;
    }
    auto dot = [&](std::size_t i, std::size_t j) {
      __int128 acc = 0;
      for (std::size_t t = 0; t < k; ++t) {
        acc += static_cast<__int128>(a(i, t)) * b(t, j);
        if (!pure) acc %= p_;
      }
      return settle(acc, pure);
    };
    if (n % 2) {
      for (std::size_t i = 0; i < me; ++i) c(i, ne) = dot(i, ne);
      macs += static_cast<std::uint64_t>(me) * k;
    }
    if (m % 2) {
      for (std::size_t j = 0; j < n; ++j) c(me, j) = dot(me, j);
      macs += static_cast<std::uint64_t>(n) * k;
    }
    if (counter()) counter()->mac(macs);
  }

  std::int64_t p_;
  MulConfig cfg_;
  BigInt cap_;
  std::uint64_t leaf_depth_ = 0;
};

inline void strassen_into(const PrimeField& f, ConstMatrixView a, ConstMatrixView b, MatrixView c,
                          const MulConfig& cfg) {
  require_dims(a.cols() == b.rows() && c.rows() == a.rows() && c.cols() == b.cols(), "gemm: dimension mismatch");
  const std::uint64_t p = f.characteristic();
  unsigned levels = cfg.max_levels.value_or(UINT_MAX);
  const unsigned planned = planned_levels(a.rows(), a.cols(), b.cols(), levels, cfg.strassen_threshold);
  if (cfg.policy == ReductionPolicy::Delayed) {
    const unsigned allowed = max_strassen_levels(p, a.cols(), cfg.beta);
    if (planned > allowed) {
      if (cfg.max_levels) {
        throw ConfigError("requested " + std::to_string(planned) + " Strassen-Winograd levels but only " +
                          std::to_string(allowed) + " keep every intermediate below 2^" +
                          std::to_string(cfg.beta + 1) + " for p = " + std::to_string(p) +
                          ", k = " + std::to_string(a.cols()));
      }
      levels = allowed;
    }
  }
  const IntMatrix ai = to_int(f, a, false);
  const IntMatrix bi = to_int(f, b, false);
  IntMatrix out(a.rows(), b.cols());
  StrassenRunner(p, cfg).run(ai.view(), bi.view(), out.view(), levels);
  from_int(f, out.view(), c);
}

}  // namespace detail

/// Strassen-Winograd product. Recursion stops at cfg.max_levels or once a
/// dimension reaches cfg.strassen_threshold.
inline DenseMatrix gemm_strassen(const DenseMatrix& a, const DenseMatrix& b, const MulConfig& cfg = {}) {
  cfg.validate();
  detail::require_dims(a.field() == b.field(), "gemm: operands over different fields");
  detail::require_dims(a.cols() == b.rows(), "gemm: inner dimensions differ");
  DenseMatrix c(a.field(), a.rows(), b.cols());
  detail::strassen_into(a.field(), a.view(), b.view(), c.view(), cfg);
  return c;
}

/// a * b + beta * c.
inline DenseMatrix addmul_strassen(const DenseMatrix& a, const DenseMatrix& b, Element beta, const DenseMatrix& c,
                                   const MulConfig& cfg = {}) {
  detail::require_dims(c.rows() == a.rows() && c.cols() == b.cols(), "addmul: accumulator shape mismatch");
  DenseMatrix r = gemm_strassen(a, b, cfg);
  const PrimeField& f = a.field();
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (std::size_t j = 0; j < r.cols(); ++j) r(i, j) = f.axpy(beta, c(i, j), r(i, j));
  if (cfg.counter) cfg.counter->mac(static_cast<std::uint64_t>(r.rows()) * r.cols());
  return r;
}

}  // namespace ffla

#endif  // FFLA_MM_STRASSEN_HPP
