#ifndef FFLA_BLACKBOX_SOLVE_HPP
#define FFLA_BLACKBOX_SOLVE_HPP

#include <algorithm>
#include <optional>
#include <string>

#include "ffla/blackbox/preconditioned.hpp"

namespace ffla {

/// A verified solution, or why none was produced. A returned vector has
/// always been checked against the operator.
struct BlackboxSolution {
  std::optional<Vector> x;
  std::size_t attempts = 0;
  std::string failure;

  explicit operator bool() const noexcept { return x.has_value(); }
};

namespace detail {

inline bool is_zero_vector(std::span<const Element> v) {
  for (auto x : v)
    if (x != 0) return false;
  return true;
}

inline bool verify_solution(const BlackboxOperator& a, std::span<const Element> x, std::span<const Element> b) {
  const Vector ax = a.apply(x);
  return std::equal(ax.begin(), ax.end(), b.begin(), b.end());
}

/// One Lanczos pass on the symmetric preconditioned system.
inline std::optional<Vector> lanczos_once(const BlackboxOperator& a, std::span<const Element> b, Rng& rng,
                                          std::string& why) {
  const PrimeField& f = a.field();
  const std::size_t m = a.rows(), n = a.cols();
  const DiagonalBlackbox d1(f, random_nonzero_vector(f, n, rng));
  const DiagonalBlackbox d2(f, random_nonzero_vector(f, m, rng));
  const TransposeBlackbox at(a);
  const ComposedBlackbox ad1(a, d1);
  const ComposedBlackbox d2ad1(d2, ad1);
  const ComposedBlackbox atd2ad1(at, d2ad1);
  const ComposedBlackbox at_(d1, atd2ad1);  // D1 A^T D2 A D1
  const Vector v = f.random_vector(n, rng);

  // b~ = D1 A^T D2 b + A~ v
  Vector bt = d1.apply(at.apply(d2.apply(b)));
  {
    const Vector av = at_.apply(v);
    for (std::size_t i = 0; i < n; ++i) bt[i] = f.add(bt[i], av[i]);
  }
  auto axpy_vec = [&](Element s, const Vector& y, Vector& acc) {
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] = f.axpy(s, y[i], acc[i]);
  };

  Vector x(n, 0);
  Vector w_prev(n, 0), v_prev(n, 0);
  Element t_prev = 1;
  Vector w = bt;
  if (!is_zero_vector(w)) {
    Vector vn = at_.apply(w);
    Element t = dot(f, vn, w);
    if (t == 0) {
      why = "breakdown: t = 0 with w != 0";
      return std::nullopt;
    }
    axpy_vec(f.mul(dot(f, bt, w), f.inv(t)), w, x);
    for (std::size_t it = 0; it <= n; ++it) {
      const Element alpha = f.mul(dot(f, vn, vn), f.inv(t));
      const Element beta = it == 0 ? 0 : f.mul(dot(f, vn, v_prev), f.inv(t_prev));
      Vector wn = vn;
      axpy_vec(f.neg(alpha), w, wn);
      if (beta != 0) axpy_vec(f.neg(beta), w_prev, wn);
      if (is_zero_vector(wn)) break;
      Vector vnn = at_.apply(wn);
      const Element tn = dot(f, wn, vnn);
      if (tn == 0) {
        why = "breakdown: t = 0 with w != 0";
        return std::nullopt;
      }
      axpy_vec(f.mul(dot(f, bt, wn), f.inv(tn)), wn, x);
      w_prev = std::move(w);
      w = std::move(wn);
      v_prev = std::move(vn);
      vn = std::move(vnn);
      t_prev = t;
      t = tn;
    }
  }
  // x = D1 (x - v)
  for (std::size_t i = 0; i < n; ++i) x[i] = f.sub(x[i], v[i]);
  return d1.apply(x);
}

}  // namespace detail

/// Preconditioned Lanczos with a Las-Vegas check; up to `max_seeds` fresh
/// preconditioners before reporting failure. Needs odd characteristic.
inline BlackboxSolution lanczos_solve(const BlackboxOperator& a, std::span<const Element> b, std::uint64_t seed,
                                      std::size_t max_seeds = 5) {
  detail::require_dims(b.size() == a.rows(), "Lanczos: right-hand side length differs from row count");
  if (a.field().characteristic() == 2) throw DomainError("Lanczos solving needs odd characteristic");
  BlackboxSolution out;
  Rng rng(seed);
  for (std::size_t t = 0; t < max_seeds; ++t) {
    Rng r = rng.split();
    ++out.attempts;
    std::string why;
    auto x = detail::lanczos_once(a, b, r, why);
    if (!x) {
      out.failure = why;
      continue;
    }
    if (detail::verify_solution(a, *x, b)) {
      out.x = std::move(x);
      out.failure.clear();
      return out;
    }
    out.failure = "candidate failed the check A x = b";
  }
  return out;
}

/// Minimal polynomial of the sequence A^i b, as the lcm of projections.
inline Polynomial krylov_minpoly_blackbox(const BlackboxOperator& a, std::span<const Element> b, Rng& rng,
                                          std::size_t projections = 2) {
  Polynomial m = Polynomial::one(a.field());
  for (std::size_t j = 0; j < projections; ++j) {
    const Vector u = a.field().random_vector(a.rows(), rng);
    m = lcm(m, wiedemann_minpoly(a, u, b));
  }
  return m;
}

/// g(A) y by Horner's rule: exactly deg(g) applications.
inline Vector horner_apply(const BlackboxOperator& a, const Polynomial& g, std::span<const Element> y) {
  const PrimeField& f = a.field();
  Vector acc(y.size(), 0);
  if (g.is_zero()) return acc;
  const int d = g.degree();
  for (std::size_t i = 0; i < y.size(); ++i) acc[i] = f.mul(g[static_cast<std::size_t>(d)], y[i]);
  for (int k = d - 1; k >= 0; --k) {
    acc = a.apply(acc);
    const Element c = g[static_cast<std::size_t>(k)];
    for (std::size_t i = 0; i < y.size(); ++i) acc[i] = f.axpy(c, y[i], acc[i]);
  }
  return acc;
}

/// With minpoly(A, b) = c + x g(x): x = -c^{-1} g(A) b.
inline BlackboxSolution wiedemann_solve(const BlackboxOperator& a, std::span<const Element> b, std::uint64_t seed,
                                        std::size_t max_seeds = 5) {
  detail::require_dims(a.rows() == a.cols() && b.size() == a.rows(), "Wiedemann solve: dimension mismatch");
  const PrimeField& f = a.field();
  BlackboxSolution out;
  Rng rng(seed);
  for (std::size_t t = 0; t < max_seeds; ++t) {
    Rng r = rng.split();
    ++out.attempts;
    const Polynomial m = krylov_minpoly_blackbox(a, b, r);
    if (m[0] == 0) {
      out.failure = "minimal polynomial of (A, b) vanishes at 0";
      continue;
    }
    const Polynomial g(f, std::vector<Element>(m.coeffs().begin() + 1, m.coeffs().end()));
    Vector x = horner_apply(a, g, b);
    const Element s = f.neg(f.inv(m[0]));
    for (auto& xi : x) xi = f.mul(s, xi);
    if (detail::verify_solution(a, x, b)) {
      out.x = std::move(x);
      out.failure.clear();
      return out;
    }
    out.failure = "candidate failed the check A x = b";
  }
  return out;
}

/// Nonzero w with A w = 0: with minpoly(A, b) = x^r g(x), follow
/// g(A) b, A g(A) b, ... to the last nonzero vector.
inline BlackboxSolution nullspace_vector(const BlackboxOperator& a, std::uint64_t seed, std::size_t max_seeds = 5) {
  detail::require_dims(a.rows() == a.cols(), "nullspace vector of a non-square operator");
  const PrimeField& f = a.field();
  const std::size_t n = a.rows();
  BlackboxSolution out;
  Rng rng(seed);
  for (std::size_t t = 0; t < max_seeds; ++t) {
    Rng r = rng.split();
    ++out.attempts;
    const Vector b = f.random_vector(n, r);
    if (detail::is_zero_vector(b)) {
      out.failure = "drew a zero vector";
      continue;
    }
    const Polynomial m = krylov_minpoly_blackbox(a, b, r);
    std::size_t rr = 0;
    while (rr < m.coeffs().size() && m[rr] == 0) ++rr;
    if (rr == 0) {
      out.failure = "x does not divide the minimal polynomial of (A, b)";
      continue;
    }
    const Polynomial g(f, std::vector<Element>(m.coeffs().begin() + static_cast<std::ptrdiff_t>(rr), m.coeffs().end()));
    Vector w = horner_apply(a, g, b);
    for (std::size_t i = 0; i <= rr && !detail::is_zero_vector(w); ++i) {
      Vector next = a.apply(w);
      if (detail::is_zero_vector(next)) {
        out.x = std::move(w);
        return out;
      }
      w = std::move(next);
    }
    out.failure = "chain did not reach the kernel";
  }
  return out;
}

}  // namespace ffla

#endif  // FFLA_BLACKBOX_SOLVE_HPP
