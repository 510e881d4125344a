// Brute-force references used by the tests. Nothing here calls the
// library's algorithms: only its containers and field arithmetic.
#ifndef FFLA_TESTS_ORACLES_HPP
#define FFLA_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "ffla/field/polynomial.hpp"
#include "ffla/field/prime_field.hpp"
#include "ffla/matrix/dense_matrix.hpp"
#include "ffla/matrix/sparse_matrix.hpp"
#include "ffla/tiny/gf2.hpp"

namespace oracle {

using ffla::DenseMatrix;
using ffla::Element;
using ffla::PrimeField;
using ffla::Vector;

/// Triple loop with a 128-bit accumulator and one reduction per entry.
inline DenseMatrix product(const DenseMatrix& a, const DenseMatrix& b) {
  const PrimeField& f = a.field();
  const auto p = static_cast<__int128>(f.characteristic());
  DenseMatrix c(f, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      __int128 s = 0;
      for (std::size_t l = 0; l < a.cols(); ++l) {
        s += static_cast<__int128>(f.to_classic(a(i, l))) * f.to_classic(b(l, j));
        s %= p;
      }
      c(i, j) = f.from_unsigned(static_cast<std::uint64_t>(s));
    }
  return c;
}

inline Vector matvec(const DenseMatrix& a, const Vector& x) {
  const PrimeField& f = a.field();
  Vector y(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) y[i] = f.add(y[i], f.mul(a(i, j), x[j]));
  return y;
}

inline Vector matvec(const ffla::SparseMatrix& a, const Vector& x) { return matvec(a.to_dense(), x); }

/// Plain Gauss-Jordan rank on a copy.
inline std::size_t rank(DenseMatrix a) {
  const PrimeField& f = a.field();
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && a(piv, c) == 0) ++piv;
    if (piv == a.rows()) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(piv, j));
    const Element inv = f.inv(a(r, c));
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      const Element m = f.mul(a(i, c), inv);
      for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = f.sub(a(i, j), f.mul(m, a(r, j)));
    }
    ++r;
  }
  return r;
}

/// Laplace expansion along the first row; n <= 8.
inline Element laplace_det(const DenseMatrix& a) {
  const PrimeField& f = a.field();
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  if (n == 1) return a(0, 0);
  Element d = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (a(0, j) == 0) continue;
    DenseMatrix minor(f, n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t k = 0, c = 0; k < n; ++k)
        if (k != j) minor(i - 1, c++) = a(i, k);
    const Element t = f.mul(a(0, j), laplace_det(minor));
    d = j % 2 ? f.sub(d, t) : f.add(d, t);
  }
  return d;
}

/// Polynomials as low-to-high coefficient vectors, for the symbolic oracles.
using Poly = std::vector<Element>;

inline Poly poly_mul(const PrimeField& f, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = f.add(c[i + j], f.mul(a[i], b[j]));
  return c;
}

inline Poly poly_add(const PrimeField& f, Poly a, const Poly& b, bool subtract) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = subtract ? f.sub(a[i], b[i]) : f.add(a[i], b[i]);
  return a;
}

using PolyMatrix = std::vector<std::vector<Poly>>;

/// Determinant over F_p[x] by cofactor expansion.
inline Poly poly_det(const PrimeField& f, const PolyMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return {1};
  if (n == 1) return m[0][0];
  Poly d;
  for (std::size_t j = 0; j < n; ++j) {
    PolyMatrix minor(n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) minor[i - 1].push_back(m[i][k]);
    d = poly_add(f, d, poly_mul(f, m[0][j], poly_det(f, minor)), j % 2 == 1);
  }
  return d;
}

inline PolyMatrix characteristic_matrix(const DenseMatrix& a) {
  const PrimeField& f = a.field();
  const std::size_t n = a.rows();
  PolyMatrix m(n, std::vector<Poly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = i == j ? Poly{f.neg(a(i, j)), 1} : Poly{f.neg(a(i, j))};
  return m;
}

/// det(x I - A) by symbolic expansion; n <= 6.
inline ffla::Polynomial symbolic_charpoly(const DenseMatrix& a) {
  return ffla::Polynomial(a.field(), poly_det(a.field(), characteristic_matrix(a)));
}

/// Invariant factors of x I - A from its determinantal divisors, largest
/// (the minimal polynomial) first. Only for n <= 6.
inline std::vector<ffla::Polynomial> invariant_factors(const DenseMatrix& a) {
  const PrimeField& f = a.field();
  const std::size_t n = a.rows();
  const PolyMatrix m = characteristic_matrix(a);
  std::vector<ffla::Polynomial> d{ffla::Polynomial::one(f)};
  for (std::size_t k = 1; k <= n; ++k) {
    ffla::Polynomial g(f);
    std::vector<bool> rsel(n, false), csel(n, false);
    std::fill(rsel.begin(), rsel.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
      std::fill(csel.begin(), csel.end(), false);
      std::fill(csel.begin(), csel.begin() + static_cast<std::ptrdiff_t>(k), true);
      do {
        PolyMatrix sub;
        for (std::size_t i = 0; i < n; ++i) {
          if (!rsel[i]) continue;
          sub.emplace_back();
          for (std::size_t j = 0; j < n; ++j)
            if (csel[j]) sub.back().push_back(m[i][j]);
        }
        g = ffla::gcd(g, ffla::Polynomial(f, poly_det(f, sub)));
      } while (std::prev_permutation(csel.begin(), csel.end()));
    } while (std::prev_permutation(rsel.begin(), rsel.end()));
    d.push_back(g);
  }
  std::vector<ffla::Polynomial> s;
  for (std::size_t k = n; k >= 1; --k) s.push_back(d[k] / d[k - 1]);
  return s;
}

/// Bit-by-bit GF(2) product.
inline ffla::PackedGF2Matrix gf2_product(const ffla::PackedGF2Matrix& a, const ffla::PackedGF2Matrix& b) {
  ffla::PackedGF2Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      bool v = false;
      for (std::size_t l = 0; l < a.cols(); ++l) v ^= a.get(i, l) && b.get(l, j);
      c.set(i, j, v);
    }
  return c;
}

/// Companion matrix of a monic f: ones on the subdiagonal, -f_i in the last column.
inline DenseMatrix companion(const ffla::Polynomial& p) {
  const PrimeField& f = p.field();
  const auto n = static_cast<std::size_t>(p.degree());
  DenseMatrix c(f, n, n);
  for (std::size_t i = 1; i < n; ++i) c(i, i - 1) = 1;
  for (std::size_t i = 0; i < n; ++i) c(i, n - 1) = f.neg(p[i]);
  return c;
}

inline DenseMatrix block_diagonal(const DenseMatrix& a, const DenseMatrix& b) {
  DenseMatrix c(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) c(a.rows() + i, a.cols() + j) = b(i, j);
  return c;
}

/// p(A) v by summing powers, no Horner.
inline Vector poly_apply(const ffla::Polynomial& p, const DenseMatrix& a, const Vector& v) {
  const PrimeField& f = a.field();
  Vector acc(v.size(), 0), w = v;
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    for (std::size_t i = 0; i < v.size(); ++i) acc[i] = f.add(acc[i], f.mul(p[k], w[i]));
    w = matvec(a, w);
  }
  return acc;
}

/// True when every pivot lies strictly right of the one above and zero
/// rows come last; `reduced` also demands unit pivots alone in their column.
inline bool is_echelon(const DenseMatrix& e, bool reduced) {
  std::ptrdiff_t last = -1;
  bool zero_seen = false;
  for (std::size_t i = 0; i < e.rows(); ++i) {
    std::ptrdiff_t lead = -1;
    for (std::size_t j = 0; j < e.cols(); ++j)
      if (e(i, j) != 0) {
        lead = static_cast<std::ptrdiff_t>(j);
        break;
      }
    if (lead < 0) {
      zero_seen = true;
      continue;
    }
    if (zero_seen || lead <= last) return false;
    last = lead;
    if (reduced) {
      if (e(i, static_cast<std::size_t>(lead)) != 1) return false;
      for (std::size_t k = 0; k < e.rows(); ++k)
        if (k != i && e(k, static_cast<std::size_t>(lead)) != 0) return false;
    }
  }
  return true;
}

/// (a + b) mod 3 and (a - b) mod 3, as a table.
inline constexpr unsigned kMod3Add[3][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
inline constexpr unsigned kMod3Sub[3][3] = {{0, 2, 1}, {1, 0, 2}, {2, 1, 0}};

}  // namespace oracle

#endif  // FFLA_TESTS_ORACLES_HPP
