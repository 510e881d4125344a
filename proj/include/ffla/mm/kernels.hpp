#ifndef FFLA_MM_KERNELS_HPP
#define FFLA_MM_KERNELS_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <thread>
#include <vector>

#include "ffla/matrix/dense_matrix.hpp"
#include "ffla/mm/config.hpp"

namespace ffla::detail {

inline constexpr std::uint64_t kNeverReduce = std::numeric_limits<std::uint64_t>::max();

/// Owning row-major int64 scratch matrix.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::int64_t> data;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}

  MatrixView view() noexcept { return {data.data(), rows, cols, cols}; }
  ConstMatrixView view() const noexcept { return {data.data(), rows, cols, cols}; }
};

inline std::uint64_t magnitude(std::int64_t x) noexcept {
  return x < 0 ? static_cast<std::uint64_t>(0) - static_cast<std::uint64_t>(x) : static_cast<std::uint64_t>(x);
}

/// Largest d with d * mag2 < 2^(beta+1); 0 when even one term does not fit.
inline std::uint64_t accumulation_depth(unsigned __int128 mag2, unsigned beta) {
  if (mag2 == 0) return kNeverReduce;
  const unsigned __int128 cap = (static_cast<unsigned __int128>(1) << (beta + 1)) - 1;
  const unsigned __int128 d = cap / mag2;
  return d > kNeverReduce - 1 ? kNeverReduce - 1 : static_cast<std::uint64_t>(d);
}

/// Copy of `src` with entries as classic ([0, p-1]) or centered integers.
inline IntMatrix to_int(const PrimeField& f, ConstMatrixView src, bool centered) {
  IntMatrix m(src.rows(), src.cols());
  const auto p = static_cast<std::int64_t>(f.characteristic());
  const std::int64_t half = (p - 1) / 2;
  for (std::size_t i = 0; i < src.rows(); ++i) {
    auto in = src.row(i);
    std::int64_t* out = m.data.data() + i * m.cols;
    for (std::size_t j = 0; j < src.cols(); ++j) {
      std::int64_t v = in[j];
      if (v < 0) v += p;
      if (centered && v > half) v -= p;
      out[j] = v;
    }
  }
  return m;
}

/// Writes reduced copies of the integer entries of `src` into `dst`.
inline void from_int(const PrimeField& f, ConstMatrixView src, MatrixView dst) {
  for (std::size_t i = 0; i < src.rows(); ++i) {
    auto in = src.row(i);
    auto out = dst.row(i);
    for (std::size_t j = 0; j < src.cols(); ++j) out[j] = f.reduce(in[j]);
  }
}

template <class Fn>
void parallel_rows(std::size_t rows, unsigned threads, Fn&& fn) {
  const std::size_t t = std::min<std::size_t>(threads, rows / 16 == 0 ? 1 : rows / 16);
  if (t <= 1) {
    fn(std::size_t{0}, rows);
    return;
  }
  std::vector<std::thread> pool;
  const std::size_t chunk = (rows + t - 1) / t;
  for (std::size_t r0 = 0; r0 < rows; r0 += chunk) pool.emplace_back([&fn, r0, chunk, rows] {
      fn(r0, std::min(rows, r0 + chunk));
    });
  for (auto& th : pool) th.join();
}

/// out = a * b over the integers, with the partial sums of every entry
/// replaced by their remainder mod p after each `depth` inner terms.
/// depth == kNeverReduce never reduces (caller guarantees no overflow);
/// depth == 0 forms each product in 128 bits and reduces immediately.
/// Outputs of reducing modes lie in (-p, p). When `max_abs` is given, the
/// largest partial-sum magnitude is recorded.
inline void int_product(ConstMatrixView a, ConstMatrixView b, MatrixView out, std::int64_t p, std::uint64_t depth,
                        unsigned threads, std::uint64_t* max_abs) {
  const std::size_t k = a.cols(), n = b.cols();
  std::vector<std::uint64_t> maxima(out.rows(), 0);
  parallel_rows(out.rows(), threads, [&](std::size_t r0, std::size_t r1) {
    std::vector<std::int64_t> acc(n);
    for (std::size_t i = r0; i < r1; ++i) {
      std::fill(acc.begin(), acc.end(), 0);
      std::uint64_t seen = 0;
      if (depth == 0) {
        for (std::size_t l = 0; l < k; ++l) {
          const std::int64_t x = a(i, l);
          if (x == 0) continue;
          const std::int64_t* brow = b.data() + l * b.stride();
          for (std::size_t j = 0; j < n; ++j)
            acc[j] = static_cast<std::int64_t>((acc[j] + static_cast<__int128>(x) * brow[j]) % p);
        }
      } else {
        std::uint64_t run = 0;
        for (std::size_t l = 0; l < k; ++l) {
          const std::int64_t x = a(i, l);
          if (x != 0) {
            const std::int64_t* brow = b.data() + l * b.stride();
            std::int64_t* dst = acc.data();
            for (std::size_t j = 0; j < n; ++j) dst[j] += x * brow[j];
            if (max_abs)
              for (std::size_t j = 0; j < n; ++j) seen = std::max(seen, magnitude(dst[j]));
          }
          if (depth != kNeverReduce && ++run == depth) {
            for (auto& v : acc) v %= p;
            run = 0;
          }
        }
        if (depth != kNeverReduce && run != 0)
          for (auto& v : acc) v %= p;
      }
      maxima[i] = seen;
      std::copy(acc.begin(), acc.end(), out.row(i).begin());
    }
  });
  if (max_abs)
    for (auto v : maxima) *max_abs = std::max(*max_abs, v);
}

/// Number of reductions int_product performs per output entry.
inline std::uint64_t reductions_per_entry(std::uint64_t k, std::uint64_t depth) {
  if (depth == kNeverReduce) return 0;
  if (depth == 0) return k;
  return (k + depth - 1) / depth;
}

}  // namespace ffla::detail

#endif  // FFLA_MM_KERNELS_HPP
