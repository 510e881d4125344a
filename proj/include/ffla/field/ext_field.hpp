#ifndef FFLA_FIELD_EXT_FIELD_HPP
#define FFLA_FIELD_EXT_FIELD_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "ffla/field/factor.hpp"

namespace ffla {

/// GF(p^k) with elements stored as discrete logarithms of a fixed
/// generator. Multiplication is an exponent addition; addition goes
/// through the polynomial (base-p digit) form via the exp/log tables.
///
/// Tables have p^k entries, so the total order is capped at 2^16.
class ExtField {
 public:
  using Element = std::uint32_t;
  static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 16;

  /// Picks a random monic irreducible modulus of degree k.
  ExtField(std::uint64_t p, unsigned k, Rng& rng) : base_(p), modulus_(base_) {
    check_order(p, k);
    for (;;) {
      std::vector<Element> c;
      for (unsigned i = 0; i < k; ++i) c.push_back(static_cast<Element>(rng.uniform(p)));
      std::vector<ffla::Element> coeffs(c.begin(), c.end());
      coeffs.push_back(1);
      Polynomial candidate(base_, std::move(coeffs));
      if (is_irreducible(candidate)) {
        modulus_ = std::move(candidate);
        break;
      }
    }
    build_tables();
  }

  explicit ExtField(const Polynomial& modulus) : base_(modulus.field()), modulus_(modulus) {
    if (modulus.degree() < 1) throw DomainError("extension modulus must have positive degree");
    check_order(base_.characteristic(), static_cast<unsigned>(modulus.degree()));
    if (!modulus.is_monic() || !is_irreducible(modulus)) {
      throw DomainError("extension modulus must be monic irreducible");
    }
    build_tables();
  }

  std::uint64_t characteristic() const noexcept { return base_.characteristic(); }
  unsigned degree() const noexcept { return k_; }
  std::uint32_t order() const noexcept { return order_; }
  const PrimeField& base_field() const noexcept { return base_; }
  const Polynomial& modulus() const noexcept { return modulus_; }

  /// exp_table()[i] is the base-p code of g^i, for i < order-1.
  const std::vector<std::uint32_t>& exp_table() const noexcept { return exp_; }
  /// log_table()[code] is the exponent of a nonzero code.
  const std::vector<std::uint32_t>& log_table() const noexcept { return log_; }

  Element zero() const noexcept { return order_ - 1; }
  Element one() const noexcept { return 0; }
  Element generator() const noexcept { return order_ > 2 ? 1 : 0; }
  bool is_zero(Element a) const noexcept { return a == zero(); }

  Element mul(Element a, Element b) const noexcept {
    if (is_zero(a) || is_zero(b)) return zero();
    std::uint32_t s = a + b;
    if (s >= order_ - 1) s -= order_ - 1;
    return s;
  }

  Element inv(Element a) const {
    if (is_zero(a)) throw DomainError("inversion of zero");
    return a == 0 ? 0 : (order_ - 1) - a;
  }

  Element pow(Element a, std::uint64_t e) const noexcept {
    if (is_zero(a)) return e == 0 ? one() : zero();
    return static_cast<Element>((static_cast<std::uint64_t>(a) * (e % (order_ - 1))) % (order_ - 1));
  }

  Element add(Element a, Element b) const noexcept {
    if (is_zero(a)) return b;
    if (is_zero(b)) return a;
    return from_code(combine(code(a), code(b), false));
  }

  Element sub(Element a, Element b) const noexcept {
    if (is_zero(b)) return a;
    return from_code(combine(code(a), code(b), true));
  }

  Element neg(Element a) const noexcept { return sub(zero(), a); }

  /// Base-p code sum c_i p^i of the element's polynomial form.
  std::uint32_t code(Element a) const noexcept { return is_zero(a) ? 0 : exp_[a]; }

  Element from_code(std::uint32_t c) const noexcept { return c == 0 ? zero() : log_[c]; }

  /// Coefficients (c_0, ..., c_{k-1}) in [0, p-1].
  std::vector<std::uint64_t> coefficients(Element a) const {
    std::vector<std::uint64_t> c(k_);
    std::uint32_t v = code(a);
    for (unsigned i = 0; i < k_; ++i) {
      c[i] = v % characteristic();
      v /= static_cast<std::uint32_t>(characteristic());
    }
    return c;
  }

  /// Element with the given coefficients; each is reduced mod p and the
  /// polynomial is reduced modulo the field modulus.
  Element from_coefficients(std::span<const std::uint64_t> coeffs) const {
    std::vector<ffla::Element> c;
    c.reserve(coeffs.size());
    for (auto v : coeffs) c.push_back(base_.from_unsigned(v));
    const Polynomial r = Polynomial(base_, std::move(c)) % modulus_;
    std::uint32_t v = 0;
    for (unsigned i = k_; i-- > 0;) {
      v = v * static_cast<std::uint32_t>(characteristic()) +
          static_cast<std::uint32_t>(base_.to_classic(r[i]));
    }
    return from_code(v);
  }

  /// Kronecker substitution: sum c_i radix^i with classic coefficients.
  template <class Int = std::uint64_t>
  Int kronecker_eval(Element a, std::uint64_t radix) const {
    const auto c = coefficients(a);
    Int acc = 0;
    for (unsigned i = k_; i-- > 0;) acc = acc * Int(radix) + Int(c[i]);
    return acc;
  }

  Element random(Rng& rng) const { return static_cast<Element>(rng.uniform(order_)); }

  bool operator==(const ExtField& o) const { return modulus_ == o.modulus_; }

 private:
  static void check_order(std::uint64_t p, unsigned k) {
    if (!is_prime(p)) throw DomainError("extension base must be prime");
    if (k == 0) throw DomainError("extension degree must be positive");
    std::uint64_t order = 1;
    for (unsigned i = 0; i < k; ++i) {
      if (order > kMaxOrder / p) throw ConfigError("extension field order exceeds 2^16");
      order *= p;
    }
  }

  std::uint32_t combine(std::uint32_t x, std::uint32_t y, bool subtract) const noexcept {
    const auto p = static_cast<std::uint32_t>(characteristic());
    std::uint32_t result = 0, scale = 1;
    for (unsigned i = 0; i < k_; ++i) {
      const std::uint32_t a = x % p, b = y % p;
      const std::uint32_t s = subtract ? (a + p - b) % p : (a + b) % p;
      result += s * scale;
      scale *= p;
      x /= p;
      y /= p;
    }
    return result;
  }

  // Product of two codes modulo the modulus, on digit vectors.
  std::uint32_t mul_codes(std::uint32_t x, std::uint32_t y) const {
    const std::uint64_t p = characteristic();
    std::vector<std::uint64_t> a(k_), b(k_), prod(2 * k_ - 1, 0);
    for (unsigned i = 0; i < k_; ++i) {
      a[i] = x % p;
      x /= static_cast<std::uint32_t>(p);
      b[i] = y % p;
      y /= static_cast<std::uint32_t>(p);
    }
    for (unsigned i = 0; i < k_; ++i)
      for (unsigned j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    const auto& m = modulus_.coeffs();
    for (unsigned i = 2 * k_ - 1; i-- > k_;) {
      const std::uint64_t f = prod[i];
      if (f == 0) continue;
      for (unsigned j = 0; j <= k_; ++j) {
        const std::uint64_t mj = base_.to_classic(m[j]);
        prod[i - k_ + j] = (prod[i - k_ + j] + p * p - f * mj % p) % p;
      }
    }
    std::uint32_t v = 0;
    for (unsigned i = k_; i-- > 0;) v = v * static_cast<std::uint32_t>(p) + static_cast<std::uint32_t>(prod[i]);
    return v;
  }

  std::uint32_t pow_code(std::uint32_t c, std::uint64_t e) const {
    std::uint32_t r = 1;
    while (e != 0) {
      if (e & 1) r = mul_codes(r, c);
      c = mul_codes(c, c);
      e >>= 1;
    }
    return r;
  }

  void build_tables() {
    k_ = static_cast<unsigned>(modulus_.degree());
    std::uint64_t order = 1;
    for (unsigned i = 0; i < k_; ++i) order *= characteristic();
    order_ = static_cast<std::uint32_t>(order);
    const std::uint64_t n = order_ - 1;

    std::vector<std::uint64_t> prime_factors;
    std::uint64_t rest = n;
    for (std::uint64_t d = 2; d * d <= rest; ++d) {
      if (rest % d == 0) {
        prime_factors.push_back(d);
        while (rest % d == 0) rest /= d;
      }
    }
    if (rest > 1) prime_factors.push_back(rest);

    std::uint32_t gen = 0;
    for (std::uint32_t c = 1; c < order_; ++c) {
      bool primitive = true;
      for (auto r : prime_factors) {
        if (pow_code(c, n / r) == 1) {
          primitive = false;
          break;
        }
      }
      if (primitive) {
        gen = c;
        break;
      }
    }
    exp_.assign(n, 0);
    log_.assign(order_, 0);
    std::uint32_t cur = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
      exp_[i] = cur;
      log_[cur] = i;
      cur = mul_codes(cur, gen);
    }
  }

  PrimeField base_;
  Polynomial modulus_;
  unsigned k_ = 0;
  std::uint32_t order_ = 0;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
};

}  // namespace ffla

#endif  // FFLA_FIELD_EXT_FIELD_HPP
