#ifndef FFLA_BLACKBOX_BERLEKAMP_MASSEY_HPP
#define FFLA_BLACKBOX_BERLEKAMP_MASSEY_HPP

#include <span>
#include <vector>

#include "ffla/field/polynomial.hpp"

namespace ffla {

/// Terms S_0, S_1, ... of a scalar sequence and how they were produced.
struct ScalarSequence {
  Vector terms;
  Vector u;
  Vector b;
  std::uint64_t seed = 0;
};

/// Incremental Berlekamp-Massey: after each push, generator() is a monic
/// polynomial of least degree annihilating every term seen so far.
class BerlekampMassey {
 public:
  explicit BerlekampMassey(const PrimeField& f) : f_(f), c_{1}, b_{1} {}

  void push(Element s) {
    seq_.push_back(s);
    const std::size_t n = seq_.size() - 1;
    // Discrepancy of the connection polynomial C on the new term.
    Element d = s;
    for (std::size_t i = 1; i <= l_ && i < c_.size(); ++i) d = f_.axpy(c_[i], seq_[n - i], d);
    if (d == 0) {
      ++m_;
      ++stable_;
      return;
    }
    const Element coef = f_.neg(f_.mul(d, f_.inv(bd_)));
    std::vector<Element> t = c_;
    if (c_.size() < b_.size() + m_) c_.resize(b_.size() + m_, 0);
    for (std::size_t i = 0; i < b_.size(); ++i) c_[i + m_] = f_.axpy(coef, b_[i], c_[i + m_]);
    if (2 * l_ <= n) {
      l_ = n + 1 - l_;
      b_ = std::move(t);
      bd_ = d;
      m_ = 1;
    } else {
      ++m_;
    }
    stable_ = 0;
  }

  std::size_t length() const noexcept { return l_; }
  std::size_t terms() const noexcept { return seq_.size(); }
  /// Consecutive terms the current generator has predicted correctly.
  std::size_t stable_terms() const noexcept { return stable_; }

  /// x^L C(1/x), monic, with sum_j g_j S_{i+j} = 0.
  Polynomial generator() const {
    std::vector<Element> g(l_ + 1, 0);
    for (std::size_t i = 0; i <= l_ && i < c_.size(); ++i) g[l_ - i] = c_[i];
    return Polynomial(f_, std::move(g));
  }

 private:
  PrimeField f_;
  std::vector<Element> seq_;
  std::vector<Element> c_;
  std::vector<Element> b_;
  std::size_t l_ = 0;
  std::size_t m_ = 1;
  Element bd_ = 1;
  std::size_t stable_ = 0;
};

inline Polynomial berlekamp_massey(const PrimeField& f, std::span<const Element> s) {
  BerlekampMassey bm(f);
  for (auto x : s) bm.push(x);
  return bm.generator();
}

inline Polynomial berlekamp_massey(const PrimeField& f, const ScalarSequence& s) {
  return berlekamp_massey(f, std::span<const Element>(s.terms));
}

}  // namespace ffla

#endif  // FFLA_BLACKBOX_BERLEKAMP_MASSEY_HPP
