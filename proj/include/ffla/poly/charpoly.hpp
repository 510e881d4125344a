#ifndef FFLA_POLY_CHARPOLY_HPP
#define FFLA_POLY_CHARPOLY_HPP

#include <vector>

#include "ffla/field/polynomial.hpp"
#include "ffla/matrix/dense_matrix.hpp"

namespace ffla {

/// Krylov vectors A^j v_i of a sequence of seeds, kept as a row-reduced
/// basis. Each reduced vector also records its expression in the Krylov
/// vectors of the current seed, which is all a dependence needs to report.
class KrylovBasis {
 public:
  struct Source {
    std::size_t seed;   // index into seeds()
    std::size_t power;  // j in A^j v
  };

  explicit KrylovBasis(const DenseMatrix& a) : a_(&a), f_(a.field()), n_(a.rows()) {
    detail::require_dims(a.square(), "Krylov basis of a non-square matrix");
  }

  std::size_t dimension() const noexcept { return reduced_.size(); }
  bool complete() const noexcept { return reduced_.size() == n_; }
  const std::vector<Vector>& seeds() const noexcept { return seeds_; }
  const std::vector<std::size_t>& degrees() const noexcept { return degrees_; }
  const std::vector<Source>& sources() const noexcept { return sources_; }

  /// Whether v lies in the current span.
  bool contains(std::span<const Element> v) const {
    Vector w(v.begin(), v.end());
    std::vector<Element> dummy;
    reduce(w, dummy, false);
    return is_zero(w);
  }

  /// Extends the basis by A^j v for j = 0, 1, ... until the first
  /// dependence on the span so far. Returns the minimal polynomial of v
  /// relative to the previous span: monic P with P(A) v in that span.
  Polynomial add_seed(std::span<const Element> v) {
    detail::require_dims(v.size() == n_, "Krylov seed has the wrong length");
    const std::size_t seed = seeds_.size();
    seeds_.emplace_back(v.begin(), v.end());
    degrees_.push_back(0);
    coeffs_.assign(reduced_.size(), {});  // earlier vectors carry no current-seed part

    Vector w(v.begin(), v.end());
    for (std::size_t d = 0;; ++d) {
      // Invariant: r = sum_j c_j A^j v + (element of the earlier span).
      std::vector<Element> c(d + 1, 0);
      c[d] = 1;
      Vector r = w;
      reduce(r, c, true);
      if (is_zero(r)) {
        // sum_j c_j A^j v lies in the earlier span and c_d = 1.
        std::vector<Element> poly(d + 1);
        for (std::size_t j = 0; j < d; ++j) poly[j] = c[j];
        poly[d] = 1;
        degrees_.back() = d;
        return Polynomial(f_, std::move(poly));
      }
      insert(std::move(r), std::move(c), {seed, d});
      w = a_->apply(w);
    }
  }

 private:
  static bool is_zero(const Vector& v) {
    for (auto x : v)
      if (x != 0) return false;
    return true;
  }

  /// Clears every basis pivot from r, applying the same combination to the
  /// current-seed coefficients c when tracking.
  void reduce(Vector& r, std::vector<Element>& c, bool track) const {
    for (std::size_t b = 0; b < reduced_.size(); ++b) {
      const Element x = r[pivots_[b]];
      if (x == 0) continue;
      const Element s = f_.neg(x);  // basis vectors have a unit pivot
      const Vector& bv = reduced_[b];
      for (std::size_t i = 0; i < n_; ++i)
        if (bv[i] != 0) r[i] = f_.axpy(s, bv[i], r[i]);
      if (track) {
        const auto& bc = coeffs_[b];
        if (c.size() < bc.size()) c.resize(bc.size(), 0);
        for (std::size_t j = 0; j < bc.size(); ++j)
          if (bc[j] != 0) c[j] = f_.axpy(s, bc[j], c[j]);
      }
    }
  }

  void insert(Vector r, std::vector<Element> c, Source src) {
    std::size_t piv = 0;
    while (r[piv] == 0) ++piv;
    const Element inv = f_.inv(r[piv]);
    for (auto& x : r) x = f_.mul(inv, x);
    for (auto& x : c) x = f_.mul(inv, x);
    reduced_.push_back(std::move(r));
    coeffs_.push_back(std::move(c));
    pivots_.push_back(piv);
    sources_.push_back(src);
  }

  const DenseMatrix* a_;
  PrimeField f_;
  std::size_t n_;
  std::vector<Vector> seeds_;
  std::vector<std::size_t> degrees_;
  std::vector<Source> sources_;
  std::vector<Vector> reduced_;
  std::vector<std::vector<Element>> coeffs_;
  std::vector<std::size_t> pivots_;
};

/// Least degree monic P with P(A) v = 0 (1 for v = 0).
inline Polynomial krylov_minpoly(const DenseMatrix& a, std::span<const Element> v) {
  KrylovBasis k(a);
  return k.add_seed(v);
}

namespace detail {

inline Vector unit_vector(std::size_t n, std::size_t i) {
  Vector e(n, 0);
  e[i] = 1;
  return e;
}

/// Seeds e_1, then the lowest e_j outside the span, until the span is full.
template <class OnSeed>
void greedy_krylov(const DenseMatrix& a, OnSeed on_seed) {
  KrylovBasis k(a);
  const std::size_t n = a.rows();
  for (std::size_t j = 0; j < n && !k.complete(); ++j) {
    const Vector e = unit_vector(n, j);
    if (j > 0 && k.contains(e)) continue;
    on_seed(e, k.add_seed(e));
  }
}

}  // namespace detail

/// Product of the diagonal companion blocks of the block upper triangular
/// Hessenberg form obtained in the greedy Krylov basis.
inline Polynomial dense_charpoly(const DenseMatrix& a) {
  Polynomial c = Polynomial::one(a.field());
  detail::greedy_krylov(a, [&](const Vector&, const Polynomial& rel) { c = c * rel; });
  return c;
}

/// lcm of the minimal polynomials of the greedy seeds. Since these seeds
/// generate the whole space, it equals the lcm over every e_i.
inline Polynomial dense_minpoly(const DenseMatrix& a) {
  Polynomial m = Polynomial::one(a.field());
  detail::greedy_krylov(a, [&](const Vector& e, const Polynomial&) { m = lcm(m, krylov_minpoly(a, e)); });
  return m;
}

/// P(A) v by Horner's rule.
inline Vector poly_apply(const Polynomial& p, const DenseMatrix& a, std::span<const Element> v) {
  const PrimeField& f = a.field();
  Vector acc(v.size(), 0);
  for (int i = p.degree(); i >= 0; --i) {
    acc = a.apply(acc);
    for (std::size_t t = 0; t < v.size(); ++t) acc[t] = f.axpy(p[static_cast<std::size_t>(i)], v[t], acc[t]);
  }
  return acc;
}

}  // namespace ffla

#endif  // FFLA_POLY_CHARPOLY_HPP
