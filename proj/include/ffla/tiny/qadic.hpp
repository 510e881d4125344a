#ifndef FFLA_TINY_QADIC_HPP
#define FFLA_TINY_QADIC_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ffla/matrix/dense_matrix.hpp"
#include "ffla/tiny/redq.hpp"

namespace ffla {

/// Vector over GF(p) packed q-adically: digit t of word w is entry
/// w * digits_per_word + t. Each word holds floor(64 / log2 q) digits.
struct QadicVector {
  std::uint64_t p = 0;
  std::uint64_t q = 0;
  std::size_t length = 0;
  std::vector<std::uint64_t> words;

  unsigned digit_bits() const { return static_cast<unsigned>(std::countr_zero(q)); }
  std::size_t digits_per_word() const { return 64 / digit_bits(); }

  std::uint64_t digit(std::size_t i) const {
    const std::size_t dpw = digits_per_word();
    const unsigned b = digit_bits();
    return (words[i / dpw] >> (b * (i % dpw))) & (q - 1);
  }

  friend bool operator==(const QadicVector&, const QadicVector&) = default;
};

/// Packs classic representatives. `max_words` bounds the storage budget.
inline QadicVector pack_qadic(std::span<const Element> v, const PrimeField& f, std::uint64_t q,
                              std::optional<std::size_t> max_words = std::nullopt) {
  const unsigned b = detail::log2_exact(q);
  if (q <= f.characteristic()) throw ConfigError("q-adic packing needs q > p");
  QadicVector out{f.characteristic(), q, v.size(), {}};
  const std::size_t dpw = 64 / b;
  const std::size_t words = (v.size() + dpw - 1) / dpw;
  if (max_words && words > *max_words)
    throw ConfigError("q-adic packing needs " + std::to_string(words) + " words, budget is " +
                      std::to_string(*max_words));
  out.words.assign(words, 0);
  for (std::size_t i = 0; i < v.size(); ++i)
    out.words[i / dpw] |= f.to_classic(v[i]) << (b * (i % dpw));
  return out;
}

inline Vector unpack_qadic(const QadicVector& x, const PrimeField& f) {
  if (f.characteristic() != x.p) throw DomainError("unpacking into a different field");
  Vector v(x.length);
  for (std::size_t i = 0; i < x.length; ++i) v[i] = f.from_unsigned(x.digit(i));
  return v;
}

/// Rows of a matrix, each packed q-adically.
struct PackedQadicMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::uint64_t q = 0;
  std::vector<QadicVector> row;

  friend bool operator==(const PackedQadicMatrix&, const PackedQadicMatrix&) = default;
};

inline PackedQadicMatrix pack_rows(const DenseMatrix& b, std::uint64_t q) {
  PackedQadicMatrix m{b.rows(), b.cols(), q, {}};
  m.row.reserve(b.rows());
  for (std::size_t i = 0; i < b.rows(); ++i) m.row.push_back(pack_qadic(b.row(i), b.field(), q));
  return m;
}

inline DenseMatrix unpack_rows(const PackedQadicMatrix& m, const PrimeField& f) {
  DenseMatrix d(f, m.rows, m.cols);
  for (std::size_t i = 0; i < m.rows; ++i) {
    const Vector v = unpack_qadic(m.row[i], f);
    std::copy(v.begin(), v.end(), d.row(i).begin());
  }
  return d;
}

/// Smallest power of two strictly above both p and k (p-1)^2, the largest digit a
/// k-term product of classic representatives can reach.
inline std::uint64_t rightpacked_required_q(std::uint64_t p, std::uint64_t k) {
  const unsigned __int128 bound = static_cast<unsigned __int128>(k) * (p - 1) * (p - 1);
  if (bound >= (static_cast<unsigned __int128>(1) << 63)) throw ConfigError("no word-size q for this inner dimension");
  const std::uint64_t above_bound = std::bit_floor(static_cast<std::uint64_t>(bound)) << 1;
  return std::max(above_bound, std::bit_floor(p) << 1);
}

/// C = A * B with B packed by rows: each packed word of C is the integer
/// combination sum_l A(i,l) * B_l[w], whose digits cannot carry because
/// q > k (p-1)^2, followed by REDQ on each word.
inline PackedQadicMatrix rightpacked_mul(const DenseMatrix& a, const PackedQadicMatrix& b) {
  detail::require_dims(a.cols() == b.rows, "right-packed product: inner dimensions differ");
  const PrimeField& f = a.field();
  const std::uint64_t p = f.characteristic();
  for (const auto& r : b.row)
    if (r.p != p || r.q != b.q) throw DomainError("packed rows over a different field or base");
  const unsigned __int128 growth = static_cast<unsigned __int128>(a.cols()) * (p - 1) * (p - 1);
  if (growth >= b.q)
    throw ConfigError("q = " + std::to_string(b.q) + " is too small for inner dimension " +
                      std::to_string(a.cols()) + "; need q > k (p-1)^2");
  const unsigned bits = detail::log2_exact(b.q);
  const std::size_t dpw = 64 / bits;
  const std::size_t words = (b.cols + dpw - 1) / dpw;

  PackedQadicMatrix c{a.rows(), b.cols, b.q, {}};
  c.row.resize(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::vector<std::uint64_t> acc(words, 0);
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const std::uint64_t x = f.to_classic(a(i, l));
      if (x == 0) continue;
      const auto& src = b.row[l].words;
      for (std::size_t w = 0; w < words; ++w) acc[w] += x * src[w];
    }
    QadicVector out{p, b.q, b.cols, std::vector<std::uint64_t>(words, 0)};
    for (std::size_t w = 0; w < words; ++w) {
      const std::size_t ndig = std::min(dpw, b.cols - w * dpw);
      out.words[w] = redq<std::uint64_t>(acc[w], p, b.q, static_cast<unsigned>(ndig - 1)).rho;
    }
    c.row[i] = std::move(out);
  }
  return c;
}

}  // namespace ffla

#endif  // FFLA_TINY_QADIC_HPP
