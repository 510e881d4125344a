#ifndef FFLA_TINY_FGDP_HPP
#define FFLA_TINY_FGDP_HPP

#include <algorithm>
#include <bit>
#include <span>
#include <vector>

#include "ffla/field/ext_field.hpp"
#include "ffla/tiny/redq.hpp"

namespace ffla {

/// Exponent -> Kronecker substitution at q, for every element of a table field.
template <class Int>
class KroneckerTable {
 public:
  KroneckerTable(const ExtField& e, std::uint64_t q) : q_(q), values_(e.order()) {
    for (std::uint32_t a = 0; a < e.order(); ++a) values_[a] = e.template kronecker_eval<Int>(a, q);
  }

  std::uint64_t q() const noexcept { return q_; }
  const Int& operator[](ExtField::Element a) const noexcept { return values_[a]; }

 private:
  std::uint64_t q_;
  std::vector<Int> values_;
};

/// Power of two >= n k (p-1)^2 + 1: no coefficient of a sum of n products
/// of degree < k polynomials with classic coefficients reaches it.
inline std::uint64_t fgdp_required_q(std::size_t n, unsigned k, std::uint64_t p) {
  const unsigned __int128 need = static_cast<unsigned __int128>(n) * k * (p - 1) * (p - 1) + 1;
  if (need > (static_cast<unsigned __int128>(1) << 63)) throw ConfigError("FGDP: no word-size q for this length");
  return std::max<std::uint64_t>(std::bit_ceil(static_cast<std::uint64_t>(need)), std::bit_floor(p) << 1);
}

/// Bits of the packed dot product: 2k - 1 digits of log2 q bits.
inline unsigned fgdp_accumulator_bits(unsigned k, std::uint64_t q) {
  return (2 * k - 1) * static_cast<unsigned>(std::countr_zero(q));
}

namespace detail {

inline void fgdp_check(const ExtField& e, std::size_t n, std::uint64_t q) {
  const std::uint64_t p = e.characteristic();
  log2_exact(q);
  const unsigned __int128 need = static_cast<unsigned __int128>(n) * e.degree() * (p - 1) * (p - 1) + 1;
  if (q < need || q <= p)
    throw ConfigError("FGDP: q = " + std::to_string(q) + " is too small; need q >= n k (p-1)^2 + 1 and q > p");
}

}  // namespace detail

/// Compressed dot product with an explicit accumulator type and table.
template <class Int>
ExtField::Element fgdp_dot(const ExtField& e, std::span<const ExtField::Element> v1,
                           std::span<const ExtField::Element> v2, const KroneckerTable<Int>& table) {
  detail::require_dims(v1.size() == v2.size(), "FGDP: length mismatch");
  const std::uint64_t q = table.q();
  detail::fgdp_check(e, v1.size(), q);
  const unsigned k = e.degree();
  if (const unsigned w = detail::int_width<Int>(); w != 0 && fgdp_accumulator_bits(k, q) > w)
    throw ConfigError("FGDP: accumulator type too narrow");

  Int r = 0;
  for (std::size_t i = 0; i < v1.size(); ++i) r += Int(table[v1[i]] * table[v2[i]]);

  const auto mu = redq<Int>(r, e.characteristic(), q, 2 * k - 2).digits;
  std::vector<std::uint64_t> low(mu.begin(), mu.begin() + (k - 1));
  std::vector<std::uint64_t> high(2 * k - 1, 0);
  for (unsigned i = k - 1; i <= 2 * k - 2; ++i) high[i] = mu[i];
  const ExtField::Element l = e.from_coefficients(low);
  const ExtField::Element h = e.from_coefficients(high);
  return e.add(h, l);
}

/// Picks q (when 0) and the narrowest accumulator among 64, 128, 256 and
/// 512 bits that holds the packed result.
inline ExtField::Element fgdp_dot(const ExtField& e, std::span<const ExtField::Element> v1,
                                  std::span<const ExtField::Element> v2, std::uint64_t q = 0) {
  if (q == 0) q = fgdp_required_q(v1.size(), e.degree(), e.characteristic());
  detail::fgdp_check(e, v1.size(), q);
  const unsigned bits = fgdp_accumulator_bits(e.degree(), q);
  if (bits <= 64) return fgdp_dot(e, v1, v2, KroneckerTable<std::uint64_t>(e, q));
  if (bits <= 128) return fgdp_dot(e, v1, v2, KroneckerTable<unsigned __int128>(e, q));
  if (bits <= 256) return fgdp_dot(e, v1, v2, KroneckerTable<uint256_t>(e, q));
  if (bits <= 512) return fgdp_dot(e, v1, v2, KroneckerTable<uint512_t>(e, q));
  throw ConfigError("FGDP: packed result needs " + std::to_string(bits) + " bits, more than 512");
}

}  // namespace ffla

#endif  // FFLA_TINY_FGDP_HPP
