#ifndef FFLA_CLI_CONFIG_HPP
#define FFLA_CLI_CONFIG_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ffla/core/errors.hpp"
#include "ffla/field/prime_field.hpp"
#include "ffla/matrix/io.hpp"
#include "ffla/mm/config.hpp"

namespace ffla::cli {

enum class Route { Dense, Blackbox, Sparse, Hybrid, Auto };
enum class OutputFormat { Text, Json };

inline std::string_view route_name(Route r) {
  switch (r) {
    case Route::Dense:
      return "dense";
    case Route::Blackbox:
      return "blackbox";
    case Route::Sparse:
      return "sparse";
    case Route::Hybrid:
      return "hybrid";
    case Route::Auto:
      return "auto";
  }
  return "?";
}

inline Route parse_route(std::string_view s) {
  for (Route r : {Route::Dense, Route::Blackbox, Route::Sparse, Route::Hybrid, Route::Auto})
    if (route_name(r) == s) return r;
  throw ConfigError("unknown algorithm route '" + std::string(s) + "'");
}

/// "p" or "p^k".
struct FieldSpec {
  std::uint64_t p = 65521;
  unsigned k = 1;

  std::string to_string() const { return k == 1 ? std::to_string(p) : std::to_string(p) + "^" + std::to_string(k); }
};

inline std::uint64_t parse_u64(std::string_view s, const char* what) {
  if (s.empty()) throw ConfigError(std::string("empty ") + what);
  std::uint64_t v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') throw ConfigError(std::string("bad ") + what + " '" + std::string(s) + "'");
    const std::uint64_t d = static_cast<std::uint64_t>(c - '0');
    if (v > (UINT64_MAX - d) / 10) throw ConfigError(std::string(what) + " out of range");
    v = v * 10 + d;
  }
  return v;
}

inline FieldSpec parse_field_spec(std::string_view s) {
  FieldSpec f;
  const auto caret = s.find('^');
  f.p = parse_u64(s.substr(0, caret), "field characteristic");
  if (caret != std::string_view::npos) {
    const std::uint64_t k = parse_u64(s.substr(caret + 1), "extension degree");
    if (k == 0 || k > 64) throw ConfigError("extension degree must lie in [1, 64]");
    f.k = static_cast<unsigned>(k);
  }
  if (!is_prime(f.p)) throw ConfigError("field characteristic " + std::to_string(f.p) + " is not prime");
  return f;
}

struct CliConfig {
  FieldSpec field;
  Route route = Route::Auto;
  std::uint64_t seed = 1;
  unsigned threads = 1;
  MulConfig mul;
  std::vector<unsigned> levels;
  double tau = 0.2;
  std::uint64_t mem_budget = std::uint64_t{1} << 30;
  std::optional<MatrixFormat> format;
  OutputFormat out = OutputFormat::Text;
  bool timings = false;

  void validate() const {
    mul.validate();
    if (!(tau >= 0.0 && tau <= 1.0)) throw ConfigError("tau must lie in [0, 1]");
    if (threads == 0) throw ConfigError("threads must be positive");
  }
};

struct MatrixStats {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t nnz = 0;

  std::size_t n() const noexcept { return std::max(rows, cols); }
  double density() const noexcept {
    return rows == 0 || cols == 0 ? 1.0 : static_cast<double>(nnz) / (static_cast<double>(rows) * cols);
  }
  long double dense_bytes() const noexcept { return static_cast<long double>(rows) * cols * sizeof(Element); }
};

struct RouteDecision {
  Route route;
  std::string reason;
};

/// Dense when the matrix is dense (> 20%) or small (n <= 256); hybrid when
/// a dense copy fits the budget; blackbox otherwise.
inline RouteDecision auto_route(const MatrixStats& s, std::uint64_t mem_budget) {
  const double d = s.density();
  if (d > 0.2) return {Route::Dense, "density " + std::to_string(d) + " > 0.2"};
  if (s.n() <= 256) return {Route::Dense, "n = " + std::to_string(s.n()) + " <= 256"};
  if (s.dense_bytes() <= static_cast<long double>(mem_budget))
    return {Route::Hybrid, "sparse and the dense footprint fits the memory budget"};
  return {Route::Blackbox, "sparse and the dense footprint exceeds the memory budget"};
}

/// Nearest supported route when `r` is not available for a command.
inline std::optional<Route> fallback_route(Route r, const std::vector<Route>& supported) {
  auto has = [&](Route x) { return std::find(supported.begin(), supported.end(), x) != supported.end(); };
  if (has(r)) return r;
  std::vector<Route> order;
  switch (r) {
    case Route::Hybrid:
      order = {Route::Sparse, Route::Dense, Route::Blackbox};
      break;
    case Route::Sparse:
      order = {Route::Hybrid, Route::Dense, Route::Blackbox};
      break;
    case Route::Blackbox:
      order = {Route::Sparse, Route::Hybrid, Route::Dense};
      break;
    default:
      order = {Route::Blackbox, Route::Sparse, Route::Hybrid};
      break;
  }
  for (Route x : order)
    if (has(x)) return x;
  return std::nullopt;
}

}  // namespace ffla::cli

#endif  // FFLA_CLI_CONFIG_HPP
