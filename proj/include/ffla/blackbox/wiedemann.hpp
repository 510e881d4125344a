#ifndef FFLA_BLACKBOX_WIEDEMANN_HPP
#define FFLA_BLACKBOX_WIEDEMANN_HPP

#include <vector>

#include "ffla/blackbox/berlekamp_massey.hpp"
#include "ffla/blackbox/report.hpp"
#include "ffla/matrix/blackbox.hpp"

namespace ffla {

struct WiedemannOptions {
  /// Stop once the generator has survived 2 delta further terms.
  bool early_termination = false;
  std::size_t delta = 8;
};

/// S_i = u^T A^i b for i < length.
inline ScalarSequence krylov_sequence(const BlackboxOperator& a, std::span<const Element> u,
                                      std::span<const Element> b, std::size_t length) {
  detail::require_dims(a.rows() == a.cols() && u.size() == a.rows() && b.size() == a.cols(),
                       "scalar sequence: dimension mismatch");
  ScalarSequence s{{}, Vector(u.begin(), u.end()), Vector(b.begin(), b.end()), 0};
  Vector w(b.begin(), b.end());
  for (std::size_t i = 0; i < length; ++i) {
    s.terms.push_back(dot(a.field(), u, w));
    if (i + 1 < length) w = a.apply(w);
  }
  return s;
}

/// Minimal generator of (u^T A^i b) from its first 2n terms.
inline Polynomial wiedemann_minpoly(const BlackboxOperator& a, std::span<const Element> u,
                                    std::span<const Element> b, const WiedemannOptions& opt = {}) {
  detail::require_dims(a.rows() == a.cols() && u.size() == a.rows() && b.size() == a.cols(),
                       "Wiedemann: dimension mismatch");
  const PrimeField& f = a.field();
  const std::size_t len = 2 * a.rows();
  BerlekampMassey bm(f);
  Vector w(b.begin(), b.end());
  for (std::size_t i = 0; i < len; ++i) {
    bm.push(dot(f, u, w));
    if (opt.early_termination && bm.stable_terms() >= 2 * opt.delta) break;
    if (i + 1 < len) w = a.apply(w);
  }
  return bm.generator();
}

/// lcm over `trials` independent (u, b) draws, with the totient bound of
/// the result as its probability report.
inline std::pair<Polynomial, ProbabilityReport> minpoly_montecarlo(const BlackboxOperator& a, std::size_t trials,
                                                                   std::uint64_t seed,
                                                                   const WiedemannOptions& opt = {}) {
  const PrimeField& f = a.field();
  const std::uint64_t s = f.characteristic() - 1;
  Polynomial m = Polynomial::one(f);
  std::vector<Polynomial> parts;
  Rng rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    Rng r = rng.split();
    const Vector u = f.random_vector(a.rows(), r);
    const Vector b = f.random_vector(a.cols(), r);
    parts.push_back(wiedemann_minpoly(a, u, b, opt));
    m = lcm(m, parts.back());
  }
  Rational bound = 0;
  if (trials > 0) bound = totient_phi(m, static_cast<unsigned>(trials));
  ProbabilityReport rep = detail::make_report("wiedemann-minpoly", "Phi_{q,j}(lcm)", bound, s);
  rep.trials = trials;
  if (trials == 0) rep.warning = "no projections drawn; the result carries no guarantee";
  for (const auto& p : parts) rep.successes += p == m;
  return {m, rep};
}

}  // namespace ffla

#endif  // FFLA_BLACKBOX_WIEDEMANN_HPP
