#ifndef FFLA_FIELD_POLYNOMIAL_HPP
#define FFLA_FIELD_POLYNOMIAL_HPP

#include <algorithm>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ffla/field/prime_field.hpp"

namespace ffla {

/// Dense univariate polynomial over a prime field, low degree first.
/// The coefficient vector never carries a zero leading coefficient; the
/// zero polynomial has no coefficients and degree -1.
class Polynomial {
 public:
  explicit Polynomial(const PrimeField& field) : field_(field) {}

  Polynomial(const PrimeField& field, std::vector<Element> coeffs)
      : field_(field), coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c = field_.reduce(c);
    trim();
  }

  static Polynomial constant(const PrimeField& field, Element c) {
    return Polynomial(field, {c});
  }
  static Polynomial one(const PrimeField& field) { return constant(field, 1); }
  static Polynomial x(const PrimeField& field) { return Polynomial(field, {0, 1}); }

  static Polynomial monomial(const PrimeField& field, std::size_t degree, Element c = 1) {
    std::vector<Element> coeffs(degree + 1, 0);
    coeffs[degree] = c;
    return Polynomial(field, std::move(coeffs));
  }

  /// x - root
  static Polynomial linear(const PrimeField& field, Element root) {
    return Polynomial(field, {field.neg(field.reduce(root)), 1});
  }

  const PrimeField& field() const noexcept { return field_; }
  const std::vector<Element>& coeffs() const noexcept { return coeffs_; }

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_one() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == 1; }

  Element operator[](std::size_t i) const noexcept {
    return i < coeffs_.size() ? coeffs_[i] : 0;
  }
  Element leading() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }

  Element evaluate(Element x) const {
    Element acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc = field_.add(field_.mul(acc, x), *it);
    }
    return acc;
  }

  Polynomial monic() const {
    if (is_zero() || is_monic()) return *this;
    const Element s = field_.inv(leading());
    Polynomial r = *this;
    for (auto& c : r.coeffs_) c = field_.mul(c, s);
    return r;
  }

  Polynomial derivative() const {
    std::vector<Element> d;
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
      d.push_back(field_.mul(field_.from_unsigned(i), coeffs_[i]));
    }
    return Polynomial(field_, std::move(d));
  }

  Polynomial scaled(Element s) const {
    Polynomial r = *this;
    for (auto& c : r.coeffs_) c = field_.mul(c, s);
    r.trim();
    return r;
  }

  /// Multiplies by x^k.
  Polynomial shifted(std::size_t k) const {
    if (is_zero()) return *this;
    std::vector<Element> c(k, 0);
    c.insert(c.end(), coeffs_.begin(), coeffs_.end());
    return Polynomial(field_, std::move(c));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    const auto& F = a.field_;
    std::vector<Element> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = F.add(a[i], b[i]);
    return Polynomial(F, std::move(c));
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    const auto& F = a.field_;
    std::vector<Element> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = F.sub(a[i], b[i]);
    return Polynomial(F, std::move(c));
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    const auto& F = a.field_;
    if (a.is_zero() || b.is_zero()) return Polynomial(F);
    std::vector<Element> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        c[i + j] = F.axpy(a.coeffs_[i], b.coeffs_[j], c[i + j]);
      }
    }
    return Polynomial(F, std::move(c));
  }

  /// Euclidean division; throws DomainError on a zero divisor.
  friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    const auto& F = a.field_;
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    if (a.degree() < b.degree()) return {Polynomial(F), a};
    std::vector<Element> r = a.coeffs_;
    std::vector<Element> q(r.size() - b.coeffs_.size() + 1, 0);
    const Element lead_inv = F.inv(b.leading());
    const std::size_t db = b.coeffs_.size() - 1;
    for (std::size_t i = r.size(); i-- > db;) {
      if (r[i] == 0) continue;
      const Element f = F.mul(r[i], lead_inv);
      q[i - db] = f;
      for (std::size_t j = 0; j <= db; ++j) {
        r[i - db + j] = F.sub(r[i - db + j], F.mul(f, b.coeffs_[j]));
      }
    }
    r.resize(db);
    return {Polynomial(F, std::move(q)), Polynomial(F, std::move(r))};
  }

  friend Polynomial operator/(const Polynomial& a, const Polynomial& b) { return divmod(a, b).first; }
  friend Polynomial operator%(const Polynomial& a, const Polynomial& b) { return divmod(a, b).second; }

  bool divides(const Polynomial& other) const { return (other % *this).is_zero(); }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
      const Element c = coeffs_[i];
      if (c == 0) continue;
      if (!first) os << " + ";
      first = false;
      if (i == 0 || c != 1) os << c;
      if (i > 0) {
        if (c != 1) os << "*";
        os << "x";
        if (i > 1) os << "^" << i;
      }
    }
    return os.str();
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  PrimeField field_;
  std::vector<Element> coeffs_;
};

/// Monic gcd (zero only when both inputs are zero).
inline Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Monic lcm; lcm with zero is zero.
inline Polynomial lcm(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial(a.field());
  return (a / gcd(a, b) * b).monic();
}

/// base^e mod m by square-and-multiply.
inline Polynomial pow_mod(Polynomial base, std::uint64_t e, const Polynomial& m) {
  Polynomial result = Polynomial::one(m.field()) % m;
  base = base % m;
  while (e != 0) {
    if (e & 1) result = result * base % m;
    base = base * base % m;
    e >>= 1;
  }
  return result;
}

}  // namespace ffla

#endif  // FFLA_FIELD_POLYNOMIAL_HPP
