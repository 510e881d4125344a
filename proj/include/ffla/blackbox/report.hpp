#ifndef FFLA_BLACKBOX_REPORT_HPP
#define FFLA_BLACKBOX_REPORT_HPP

#include <optional>
#include <string>

#include "ffla/field/factor.hpp"

namespace ffla {

/// What a Monte-Carlo answer is worth: a lower bound on the probability
/// that it is correct, for the sample set actually used.
struct ProbabilityReport {
  std::string algorithm;
  std::string bound_formula;
  Rational bound = 0;
  /// Random entries are drawn from the nonzero field elements.
  std::uint64_t sample_set_size = 0;
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  std::optional<std::string> warning;

  double bound_value() const { return bound.convert_to<double>(); }
};

namespace detail {

inline Rational clamp_probability(const Rational& r) {
  if (r < 0) return Rational(0);
  if (r > 1) return Rational(1);
  return r;
}

inline ProbabilityReport make_report(std::string algorithm, std::string formula, const Rational& bound,
                                     std::uint64_t sample_set) {
  ProbabilityReport r{std::move(algorithm), std::move(formula), clamp_probability(bound), sample_set, 0, 0, {}};
  if (r.bound < Rational(1, 2))
    r.warning = "success bound below 1/2 over a field this small; consider working in an extension field";
  return r;
}

/// 1 - num / (den |S|).
inline Rational one_minus(const BigInt& num, const BigInt& den, std::uint64_t s) {
  return Rational(1) - Rational(num, den * BigInt(s));
}

}  // namespace detail

}  // namespace ffla

#endif  // FFLA_BLACKBOX_REPORT_HPP
