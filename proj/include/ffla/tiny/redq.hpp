#ifndef FFLA_TINY_REDQ_HPP
#define FFLA_TINY_REDQ_HPP

#include <bit>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ffla/core/errors.hpp"

namespace ffla {

using boost::multiprecision::uint256_t;
using boost::multiprecision::uint512_t;

template <class Int>
struct RedqResult {
  Int rho = 0;
  /// mu_0 .. mu_d, each in [0, p).
  std::vector<std::uint64_t> digits;
};

namespace detail {

template <class Int>
std::uint64_t low_u64(const Int& x) {
  if constexpr (std::is_integral_v<Int> || std::is_same_v<Int, unsigned __int128>) {
    return static_cast<std::uint64_t>(x);
  } else {
    return static_cast<std::uint64_t>(x & Int(~std::uint64_t{0}));
  }
}

/// Bit width of Int; 0 for unbounded types.
template <class Int>
constexpr unsigned int_width() {
  if constexpr (std::is_same_v<Int, unsigned __int128>) {
    return 128;
  } else if constexpr (std::numeric_limits<Int>::is_bounded) {
    return static_cast<unsigned>(std::numeric_limits<Int>::digits);
  } else {
    return 0;
  }
}

inline unsigned log2_exact(std::uint64_t q) {
  if (q < 2 || !std::has_single_bit(q)) throw ConfigError("q must be a power of two >= 2");
  return static_cast<unsigned>(std::countr_zero(q));
}

}  // namespace detail

/// Simultaneous reduction of the base-q digits of r modulo p.
///
/// Compression: s = floor(r/p), u_i = floor(r/q^i) - p floor(s/q^i), which
/// equals floor(r/q^i) mod p. Correction (skipped when p divides q):
/// mu_d = u_d, mu_i = (u_i - q u_{i+1}) mod p.
///
/// Exact whenever the intended digits mu~_0 .. mu~_{d-1} lie in [0, q)
/// (the top digit is unrestricted), i.e. they are the true base-q digits of r.
template <class Int>
RedqResult<Int> redq(const Int& r, std::uint64_t p, std::uint64_t q, unsigned d) {
  const unsigned shift = detail::log2_exact(q);
  if (p < 2 || p >= q) throw ConfigError("REDQ needs 2 <= p < q");
  const Int s = r / Int(p);
  std::vector<std::uint64_t> u(d + 1);
  for (unsigned i = 0; i <= d; ++i) {
    const Int hi = r >> (shift * i);
    const Int shi = s >> (shift * i);
    u[i] = detail::low_u64(Int(hi - Int(p) * shi));
  }
  RedqResult<Int> out;
  out.digits.resize(d + 1);
  if (q % p == 0) {
    out.digits = u;
  } else {
    out.digits[d] = u[d];
    const auto qm = static_cast<unsigned __int128>(q % p);
    for (unsigned i = 0; i < d; ++i) {
      const auto t = static_cast<unsigned __int128>(u[i]) + p - static_cast<std::uint64_t>(qm * u[i + 1] % p);
      out.digits[i] = static_cast<std::uint64_t>(t % p);
    }
  }
  for (unsigned i = d + 1; i-- > 0;) out.rho = Int(out.rho << shift) + Int(out.digits[i]);
  return out;
}

/// REDQ on r = sum digits[i] q^i given explicitly. Rejects inputs outside
/// the exactness domain (a non-top digit >= q).
template <class Int = boost::multiprecision::cpp_int>
RedqResult<Int> redq_digits(std::span<const std::uint64_t> digits, std::uint64_t p, std::uint64_t q) {
  if (digits.empty()) throw DomainError("REDQ needs at least one digit");
  const unsigned shift = detail::log2_exact(q);
  for (std::size_t i = 0; i + 1 < digits.size(); ++i)
    if (digits[i] >= q) throw DomainError("REDQ digit " + std::to_string(i) + " is not below q");
  if constexpr (detail::int_width<Int>() != 0) {
    const std::size_t bits = (digits.size() - 1) * shift + std::bit_width(digits.back());
    if (bits > detail::int_width<Int>()) throw ConfigError("REDQ input does not fit the integer type");
  }
  Int r = 0;
  for (std::size_t i = digits.size(); i-- > 0;) r = Int(r << shift) + Int(digits[i]);
  return redq<Int>(r, p, q, static_cast<unsigned>(digits.size() - 1));
}

}  // namespace ffla

#endif  // FFLA_TINY_REDQ_HPP
