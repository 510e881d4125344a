#ifndef FFLA_FIELD_PRIME_FIELD_HPP
#define FFLA_FIELD_PRIME_FIELD_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ffla/core/errors.hpp"
#include "ffla/core/random.hpp"

namespace ffla {

/// Field elements are machine integers; their canonical range depends on
/// the representation of the owning PrimeField.
using Element = std::int64_t;
using Vector = std::vector<Element>;

enum class Representation {
  Classic,   ///< [0, p-1]
  Centered,  ///< [(1-p)/2, (p-1)/2], odd p only
};

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (e != 0) {
    if (e & 1) result = mulmod_u64(result, base, m);
    base = mulmod_u64(base, base, m);
    e >>= 1;
  }
  return result;
}

}  // namespace detail

/// Deterministic Miller-Rabin; the witness set is exact for all n < 2^64.
inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::uint64_t small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t q : small) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : small) {
    std::uint64_t x = detail::powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = detail::mulmod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

/// Word-size prime field GF(p), p < 2^62.
///
/// The context is a small immutable value: copy it freely. Every element
/// handed to or returned from an operation is canonical for the context's
/// representation.
class PrimeField {
 public:
  static constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 62;

  explicit PrimeField(std::uint64_t p, Representation rep = Representation::Classic)
      : p_(p), rep_(rep) {
    if (p >= kMaxModulus) throw DomainError("modulus must be below 2^62");
    if (!is_prime(p)) throw DomainError("modulus " + std::to_string(p) + " is not prime");
    if (rep == Representation::Centered && p == 2) {
      throw DomainError("centered representation requires an odd prime");
    }
    sp_ = static_cast<std::int64_t>(p);
    half_ = (sp_ - 1) / 2;
    small_ = p < (std::uint64_t{1} << 31);
  }

  std::uint64_t characteristic() const noexcept { return p_; }
  std::uint64_t cardinality() const noexcept { return p_; }
  Representation representation() const noexcept { return rep_; }
  bool centered() const noexcept { return rep_ == Representation::Centered; }

  Element min_element() const noexcept { return centered() ? -half_ : 0; }
  Element max_element() const noexcept { return centered() ? half_ : sp_ - 1; }

  bool is_canonical(Element a) const noexcept {
    return a >= min_element() && a <= max_element();
  }

  Element zero() const noexcept { return 0; }
  Element one() const noexcept { return 1; }
  bool is_zero(Element a) const noexcept { return a == 0; }

  /// Canonical representative of an arbitrary integer.
  Element reduce(std::int64_t x) const noexcept { return canonical(x % sp_); }

  Element reduce(__int128 x) const noexcept {
    return canonical(static_cast<std::int64_t>(x % static_cast<__int128>(sp_)));
  }

  Element from_unsigned(std::uint64_t x) const noexcept {
    return canonical(static_cast<std::int64_t>(x % p_));
  }

  /// Representative in [0, p-1] regardless of mode.
  std::uint64_t to_classic(Element a) const noexcept {
    return static_cast<std::uint64_t>(a < 0 ? a + sp_ : a);
  }

  /// Re-expresses an element of `other` (same characteristic) in this mode.
  Element convert(Element a, const PrimeField& other) const noexcept {
    return from_unsigned(other.to_classic(a));
  }

  Element add(Element a, Element b) const noexcept { return canonical_near(a + b); }
  Element sub(Element a, Element b) const noexcept { return canonical_near(a - b); }
  Element neg(Element a) const noexcept { return canonical_near(-a); }

  Element mul(Element a, Element b) const noexcept {
    if (small_) return canonical((a * b) % sp_);
    return canonical(static_cast<std::int64_t>(static_cast<__int128>(a) * b %
                                               static_cast<__int128>(sp_)));
  }

  /// a*b + c
  Element axpy(Element a, Element b, Element c) const noexcept { return add(mul(a, b), c); }

  Element inv(Element a) const {
    if (a == 0) throw DomainError("inversion of zero");
    // Extended Euclid on the classic representative.
    std::int64_t r0 = sp_, r1 = static_cast<std::int64_t>(to_classic(a));
    std::int64_t s0 = 0, s1 = 1;
    while (r1 != 0) {
      std::int64_t q = r0 / r1;
      std::int64_t t = r0 - q * r1;
      r0 = r1;
      r1 = t;
      t = s0 - q * s1;
      s0 = s1;
      s1 = t;
    }
    return reduce(s0);
  }

  Element div(Element a, Element b) const { return mul(a, inv(b)); }

  Element pow(Element a, std::uint64_t e) const noexcept {
    Element result = one();
    while (e != 0) {
      if (e & 1) result = mul(result, a);
      a = mul(a, a);
      e >>= 1;
    }
    return result;
  }

  Element random(Rng& rng) const { return from_unsigned(rng.uniform(p_)); }
  Element random_nonzero(Rng& rng) const { return from_unsigned(1 + rng.uniform(p_ - 1)); }

  Vector random_vector(std::size_t n, Rng& rng) const {
    Vector v(n);
    for (auto& x : v) x = random(rng);
    return v;
  }

  bool operator==(const PrimeField& o) const noexcept { return p_ == o.p_ && rep_ == o.rep_; }
  bool operator!=(const PrimeField& o) const noexcept { return !(*this == o); }

 private:
  // x in (-p, p)
  Element canonical(std::int64_t x) const noexcept {
    if (centered()) {
      if (x > half_) return x - sp_;
      if (x < -half_) return x + sp_;
      return x;
    }
    return x < 0 ? x + sp_ : x;
  }

  // x in (-2p, 2p), the range of sums of two canonical elements.
  Element canonical_near(std::int64_t x) const noexcept {
    if (centered()) {
      if (x > half_) return x - sp_;
      if (x < -half_) return x + sp_;
      return x;
    }
    if (x >= sp_) return x - sp_;
    if (x < 0) return x + sp_;
    return x;
  }

  std::uint64_t p_;
  Representation rep_;
  std::int64_t sp_ = 0;
  std::int64_t half_ = 0;
  bool small_ = false;
};

}  // namespace ffla

#endif  // FFLA_FIELD_PRIME_FIELD_HPP
