#ifndef FFLA_TINY_GF3_HPP
#define FFLA_TINY_GF3_HPP

#include <cstdint>

#include "ffla/tiny/gf2.hpp"

namespace ffla {

/// 64 GF(3) elements as two bit planes: 0 = [0,0], 1 = [1,0], -1 = [1,1]
/// (bit from plane 0, bit from plane 1). [0,1] never occurs.
struct Gf3Word {
  std::uint64_t b0 = 0;
  std::uint64_t b1 = 0;

  friend bool operator==(const Gf3Word&, const Gf3Word&) = default;
};

/// Word-level boolean operation counter.
struct BoolOpCounter {
  std::uint64_t ops = 0;
};

// 6 boolean operations.
inline Gf3Word gf3_add(Gf3Word x, Gf3Word y, BoolOpCounter* c = nullptr) noexcept {
  const std::uint64_t s = x.b0 ^ y.b1;
  const std::uint64_t t = x.b1 ^ y.b0;
  if (c) c->ops += 6;
  return {(s ^ x.b1) | (t ^ y.b1), s & t};
}

// 6 boolean operations.
inline Gf3Word gf3_sub(Gf3Word x, Gf3Word y, BoolOpCounter* c = nullptr) noexcept {
  const std::uint64_t t = x.b0 ^ y.b0;
  if (c) c->ops += 6;
  return {t | (x.b1 ^ y.b1), (t ^ y.b1) & (y.b0 ^ x.b1)};
}

// 1 boolean operation.
inline Gf3Word gf3_neg(Gf3Word x, BoolOpCounter* c = nullptr) noexcept {
  if (c) c->ops += 1;
  return {x.b0, x.b1 ^ x.b0};
}

inline bool gf3_valid(Gf3Word x) noexcept { return (x.b1 & ~x.b0) == 0; }

/// Encodes v in {0, 1, 2} (2 meaning -1) in every lane selected by `mask`.
inline Gf3Word gf3_broadcast(unsigned v, std::uint64_t mask = ~std::uint64_t{0}) noexcept {
  switch (v % 3) {
    case 1:
      return {mask, 0};
    case 2:
      return {mask, mask};
    default:
      return {0, 0};
  }
}

/// Value (0, 1 or 2) in lane j.
inline unsigned gf3_lane(Gf3Word x, unsigned j) noexcept {
  const unsigned a = (x.b0 >> j) & 1U, b = (x.b1 >> j) & 1U;
  return a == 0 ? 0 : (b == 0 ? 1 : 2);
}

/// Bit-sliced GF(3) matrix: two PackedGF2Matrix planes of equal shape.
class BitslicedGF3Matrix {
 public:
  BitslicedGF3Matrix() = default;
  BitslicedGF3Matrix(std::size_t rows, std::size_t cols) : plane0_(rows, cols), plane1_(rows, cols) {}

  static BitslicedGF3Matrix from_dense(const DenseMatrix& a) {
    if (a.field().characteristic() != 3) throw DomainError("bit-sliced GF(3) matrix needs a GF(3) source");
    BitslicedGF3Matrix m(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) m.set(i, j, static_cast<unsigned>(a.field().to_classic(a(i, j))));
    return m;
  }

  DenseMatrix to_dense(const PrimeField& f3) const {
    if (f3.characteristic() != 3) throw DomainError("bit-sliced GF(3) matrix converts only to GF(3)");
    DenseMatrix d(f3, rows(), cols());
    for (std::size_t i = 0; i < rows(); ++i)
      for (std::size_t j = 0; j < cols(); ++j) d(i, j) = f3.from_unsigned(get(i, j));
    return d;
  }

  std::size_t rows() const noexcept { return plane0_.rows(); }
  std::size_t cols() const noexcept { return plane0_.cols(); }
  const PackedGF2Matrix& plane0() const noexcept { return plane0_; }
  const PackedGF2Matrix& plane1() const noexcept { return plane1_; }

  unsigned get(std::size_t i, std::size_t j) const noexcept {
    return !plane0_.get(i, j) ? 0 : (plane1_.get(i, j) ? 2 : 1);
  }
  void set(std::size_t i, std::size_t j, unsigned v) noexcept {
    v %= 3;
    plane0_.set(i, j, v != 0);
    plane1_.set(i, j, v == 2);
  }

  Gf3Word word(std::size_t i, std::size_t w) const noexcept { return {plane0_.row(i)[w], plane1_.row(i)[w]}; }
  void set_word(std::size_t i, std::size_t w, Gf3Word x) noexcept {
    plane0_.row(i)[w] = x.b0;
    plane1_.row(i)[w] = x.b1;
  }

  /// No [0,1] pattern anywhere and zero padding.
  bool valid() const {
    if (!plane0_.padding_clean() || !plane1_.padding_clean()) return false;
    for (std::size_t i = 0; i < rows(); ++i)
      for (std::size_t w = 0; w < plane0_.words_per_row(); ++w)
        if (!gf3_valid(word(i, w))) return false;
    return true;
  }

  friend BitslicedGF3Matrix operator+(const BitslicedGF3Matrix& x, const BitslicedGF3Matrix& y) {
    return zip(x, y, [](Gf3Word a, Gf3Word b) { return gf3_add(a, b); });
  }
  friend BitslicedGF3Matrix operator-(const BitslicedGF3Matrix& x, const BitslicedGF3Matrix& y) {
    return zip(x, y, [](Gf3Word a, Gf3Word b) { return gf3_sub(a, b); });
  }
  BitslicedGF3Matrix operator-() const {
    BitslicedGF3Matrix r = *this;
    for (std::size_t i = 0; i < rows(); ++i)
      for (std::size_t w = 0; w < plane0_.words_per_row(); ++w) r.set_word(i, w, gf3_neg(word(i, w)));
    return r;
  }

  friend bool operator==(const BitslicedGF3Matrix&, const BitslicedGF3Matrix&) = default;

 private:
  template <class Op>
  static BitslicedGF3Matrix zip(const BitslicedGF3Matrix& x, const BitslicedGF3Matrix& y, Op op) {
    detail::require_dims(x.rows() == y.rows() && x.cols() == y.cols(), "GF(3) shape mismatch");
    BitslicedGF3Matrix r(x.rows(), x.cols());
    for (std::size_t i = 0; i < x.rows(); ++i)
      for (std::size_t w = 0; w < x.plane0_.words_per_row(); ++w) r.set_word(i, w, op(x.word(i, w), y.word(i, w)));
    return r;
  }

  PackedGF2Matrix plane0_;
  PackedGF2Matrix plane1_;
};

}  // namespace ffla

#endif  // FFLA_TINY_GF3_HPP
