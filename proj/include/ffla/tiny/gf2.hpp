#ifndef FFLA_TINY_GF2_HPP
#define FFLA_TINY_GF2_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "ffla/matrix/dense_matrix.hpp"

namespace ffla {

/// GF(2) matrix with 64 entries per machine word; bit j of word w in a row
/// is column 64 w + j. Bits past the last column are always zero.
class PackedGF2Matrix {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kBits = 64;

  PackedGF2Matrix() = default;
  PackedGF2Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), wpr_((cols + kBits - 1) / kBits), data_(rows * wpr_, 0) {}

  static PackedGF2Matrix identity(std::size_t n) {
    PackedGF2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
  }

  static PackedGF2Matrix random(std::size_t rows, std::size_t cols, Rng& rng) {
    PackedGF2Matrix m(rows, cols);
    for (auto& w : m.data_) w = rng.next();
    m.clear_padding();
    return m;
  }

  /// Entries must come from a field of characteristic 2.
  static PackedGF2Matrix from_dense(const DenseMatrix& a) {
    if (a.field().characteristic() != 2) throw DomainError("packed GF(2) matrix needs a GF(2) source");
    PackedGF2Matrix m(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j)
        if (a(i, j) != 0) m.set(i, j, true);
    return m;
  }

  DenseMatrix to_dense() const {
    DenseMatrix d(PrimeField(2), rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) d(i, j) = get(i, j) ? 1 : 0;
    return d;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t words_per_row() const noexcept { return wpr_; }

  bool get(std::size_t i, std::size_t j) const noexcept {
    return (data_[i * wpr_ + j / kBits] >> (j % kBits)) & 1U;
  }
  void set(std::size_t i, std::size_t j, bool v) noexcept {
    Word& w = data_[i * wpr_ + j / kBits];
    const Word bit = Word{1} << (j % kBits);
    w = v ? (w | bit) : (w & ~bit);
  }

  std::span<Word> row(std::size_t i) noexcept { return {data_.data() + i * wpr_, wpr_}; }
  std::span<const Word> row(std::size_t i) const noexcept { return {data_.data() + i * wpr_, wpr_}; }

  /// row(dst) ^= row(src)
  void add_row(std::size_t dst, std::size_t src) noexcept {
    Word* d = data_.data() + dst * wpr_;
    const Word* s = data_.data() + src * wpr_;
    for (std::size_t w = 0; w < wpr_; ++w) d[w] ^= s[w];
  }

  void swap_rows(std::size_t a, std::size_t b) noexcept {
    if (a == b) return;
    std::swap_ranges(data_.begin() + static_cast<std::ptrdiff_t>(a * wpr_),
                     data_.begin() + static_cast<std::ptrdiff_t>((a + 1) * wpr_),
                     data_.begin() + static_cast<std::ptrdiff_t>(b * wpr_));
  }

  /// Bits [c0, c0 + width) of row i as an integer (bit t = column c0 + t);
  /// width <= 32.
  std::uint32_t bits(std::size_t i, std::size_t c0, unsigned width) const noexcept {
    const std::size_t w = c0 / kBits, off = c0 % kBits;
    const Word* r = data_.data() + i * wpr_;
    Word v = r[w] >> off;
    if (off + width > kBits && w + 1 < wpr_) v |= r[w + 1] << (kBits - off);
    return static_cast<std::uint32_t>(v & ((Word{1} << width) - 1));
  }

  /// True when every bit past the last column is zero.
  bool padding_clean() const noexcept {
    if (cols_ % kBits == 0) return true;
    const Word mask = ~((Word{1} << (cols_ % kBits)) - 1);
    for (std::size_t i = 0; i < rows_; ++i)
      if (data_[i * wpr_ + wpr_ - 1] & mask) return false;
    return true;
  }

  void clear_padding() noexcept {
    if (cols_ % kBits == 0 || wpr_ == 0) return;
    const Word keep = (Word{1} << (cols_ % kBits)) - 1;
    for (std::size_t i = 0; i < rows_; ++i) data_[i * wpr_ + wpr_ - 1] &= keep;
  }

  PackedGF2Matrix transpose() const {
    PackedGF2Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (get(i, j)) t.set(j, i, true);
    return t;
  }

  friend bool operator==(const PackedGF2Matrix&, const PackedGF2Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t wpr_ = 0;
  std::vector<Word> data_;
};

struct M4rmStats {
  std::uint64_t tables = 0;
  /// Row XORs spent building each table, in slice order.
  std::vector<std::uint64_t> table_xors;
  /// Row XORs spent adding table rows into the product.
  std::uint64_t lookup_xors = 0;
};

/// Table width for an inner dimension n: max(1, min(8, floor(log2 n))).
inline unsigned m4rm_default_k(std::size_t n) {
  if (n < 2) return 1;
  const unsigned lg = static_cast<unsigned>(std::bit_width(n)) - 1;
  return std::clamp(lg, 1U, 8U);
}

/// Four-Russians product. A is consumed in k-column slices; for each slice
/// the 2^k combinations of the matching rows of B are tabulated in Gray-code
/// order, one row XOR per entry, and each row of A picks its combination.
inline PackedGF2Matrix m4rm_mul(const PackedGF2Matrix& a, const PackedGF2Matrix& b, unsigned k = 0,
                                M4rmStats* stats = nullptr) {
  detail::require_dims(a.cols() == b.rows(), "m4rm: inner dimensions differ");
  if (k == 0) k = m4rm_default_k(a.cols());
  if (k > 16) throw ConfigError("m4rm table width must lie in [1, 16]");
  using Word = PackedGF2Matrix::Word;
  const std::size_t wpr = b.words_per_row();
  PackedGF2Matrix c(a.rows(), b.cols());
  std::vector<Word> table;
  for (std::size_t c0 = 0; c0 < a.cols(); c0 += k) {
    const auto ks = static_cast<unsigned>(std::min<std::size_t>(k, a.cols() - c0));
    const std::size_t entries = std::size_t{1} << ks;
    table.assign(entries * wpr, 0);
    std::uint64_t xors = 0;
    for (std::size_t i = 1; i < entries; ++i) {
      const std::size_t g = i ^ (i >> 1);
      const std::size_t prev = (i - 1) ^ ((i - 1) >> 1);
      const auto bit = static_cast<unsigned>(std::countr_zero(g ^ prev));
      const auto src = b.row(c0 + bit);
      Word* dst = table.data() + g * wpr;
      const Word* from = table.data() + prev * wpr;
      for (std::size_t w = 0; w < wpr; ++w) dst[w] = from[w] ^ src[w];
      ++xors;
    }
    std::uint64_t lookups = 0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      const std::uint32_t idx = a.bits(i, c0, ks);
      if (idx == 0) continue;
      auto out = c.row(i);
      const Word* t = table.data() + idx * wpr;
      for (std::size_t w = 0; w < wpr; ++w) out[w] ^= t[w];
      ++lookups;
    }
    if (stats) {
      ++stats->tables;
      stats->table_xors.push_back(xors);
      stats->lookup_xors += lookups;
    }
  }
  return c;
}

}  // namespace ffla

#endif  // FFLA_TINY_GF2_HPP
