#ifndef FFLA_CORE_ERRORS_HPP
#define FFLA_CORE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ffla {

/// Raised when an argument lies outside the mathematical domain of an
/// operation (inverse of zero, rank larger than the shape allows, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SingularError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A kernel was asked to run with parameters it cannot honour exactly
/// (packing base too small, accumulator too narrow, too many levels).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

namespace detail {

inline void require_dims(bool ok, const char* what) {
  if (!ok) throw DimensionError(what);
}

}  // namespace detail
}  // namespace ffla

#endif  // FFLA_CORE_ERRORS_HPP
