#ifndef FFLA_FIELD_FACTOR_HPP
#define FFLA_FIELD_FACTOR_HPP

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ffla/field/polynomial.hpp"

namespace ffla {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Product of the distinct monic irreducible factors of f.
inline Polynomial squarefree_part(const Polynomial& f) {
  if (f.is_zero()) throw DomainError("squarefree part of the zero polynomial");
  Polynomial g = f.monic();
  if (g.degree() <= 0) return g;
  const Polynomial d = g.derivative();
  if (d.is_zero()) {
    // g(x) = h(x^p) = h(x)^p over GF(p).
    const std::uint64_t p = g.field().characteristic();
    std::vector<Element> h;
    for (std::size_t i = 0; i < g.coeffs().size(); i += p) h.push_back(g.coeffs()[i]);
    return squarefree_part(Polynomial(g.field(), std::move(h)));
  }
  const Polynomial common = gcd(g, d);
  if (common.degree() == 0) return g;
  // Factors whose multiplicity is a multiple of p survive only in `common`.
  return lcm(g / common, squarefree_part(common));
}

/// Degrees of the distinct monic irreducible factors of f (sorted,
/// with repetition), by distinct-degree factorization of its squarefree
/// part. Only the degree profile is produced, never the factors.
inline std::vector<unsigned> distinct_degree_factor_degrees(const Polynomial& f) {
  if (f.is_zero()) throw DomainError("degree profile of the zero polynomial");
  const PrimeField& F = f.field();
  const std::uint64_t q = F.characteristic();
  Polynomial g = squarefree_part(f);
  std::vector<unsigned> degrees;
  const Polynomial x = Polynomial::x(F);
  Polynomial h = x % (g.degree() > 0 ? g : Polynomial::one(F));
  for (unsigned i = 1; g.degree() > 0; ++i) {
    if (2 * static_cast<int>(i) > g.degree()) {
      degrees.push_back(static_cast<unsigned>(g.degree()));
      break;
    }
    h = pow_mod(h, q, g);
    const Polynomial d = gcd(h - x, g);
    if (d.degree() > 0) {
      degrees.insert(degrees.end(), static_cast<std::size_t>(d.degree()) / i, i);
      g = g / d;
      h = h % g;
    }
  }
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

inline bool is_irreducible(const Polynomial& f) {
  if (f.degree() < 1) return false;
  const auto degs = distinct_degree_factor_degrees(f);
  return degs.size() == 1 && static_cast<int>(degs[0]) == f.degree() &&
         squarefree_part(f).degree() == f.degree();
}

/// Phi_{q,k} over an explicit degree profile: prod (1 - q^(-k d)).
inline Rational totient_phi(std::span<const unsigned> degrees, std::uint64_t q, unsigned k) {
  Rational phi = 1;
  for (unsigned d : degrees) {
    BigInt denom = boost::multiprecision::pow(BigInt(q), k * d);
    phi *= Rational(denom - 1, denom);
  }
  return phi;
}

/// Extended totient of f over GF(q), q the field order of f's coefficients.
inline Rational totient_phi(const Polynomial& f, unsigned k) {
  const auto degrees = distinct_degree_factor_degrees(f);
  return totient_phi(degrees, f.field().characteristic(), k);
}

}  // namespace ffla

#endif  // FFLA_FIELD_FACTOR_HPP
