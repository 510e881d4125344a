#ifndef FFLA_MATRIX_IO_HPP
#define FFLA_MATRIX_IO_HPP

#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ffla/matrix/sparse_matrix.hpp"

namespace ffla {

enum class MatrixFormat { Sms, MatrixMarket, DenseText };

inline MatrixFormat parse_format(std::string_view s) {
  if (s == "sms") return MatrixFormat::Sms;
  if (s == "mtx" || s == "matrixmarket") return MatrixFormat::MatrixMarket;
  if (s == "dense" || s == "dense-text" || s == "txt") return MatrixFormat::DenseText;
  throw ConfigError("unknown matrix format '" + std::string(s) + "'");
}

/// Guess from a file name extension; dense text when unknown.
inline MatrixFormat format_from_path(std::string_view path) {
  auto ends = [&](std::string_view ext) {
    return path.size() >= ext.size() && path.substr(path.size() - ext.size()) == ext;
  };
  if (ends(".sms")) return MatrixFormat::Sms;
  if (ends(".mtx")) return MatrixFormat::MatrixMarket;
  return MatrixFormat::DenseText;
}

namespace detail {

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  /// Next line that is neither blank nor (when `skip_percent`) a % comment.
  bool next(std::string& line, bool skip_percent) {
    while (std::getline(in_, line)) {
      ++line_no_;
      const auto pos = line.find_first_not_of(" \t\r");
      if (pos == std::string::npos) continue;
      if (skip_percent && line[pos] == '%') continue;
      return true;
    }
    return false;
  }

  std::size_t line() const noexcept { return line_no_; }

 private:
  std::istream& in_;
  std::size_t line_no_ = 0;
};

inline std::vector<std::string> split_tokens(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  for (std::string t; ss >> t;) out.push_back(t);
  return out;
}

inline std::size_t parse_index(const std::string& tok, std::size_t line) {
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError(line, "expected a nonnegative integer, got '" + tok + "'");
  try {
    return static_cast<std::size_t>(std::stoull(tok));
  } catch (const std::exception&) {
    throw ParseError(line, "integer out of range '" + tok + "'");
  }
}

/// Any decimal integer, reduced into the field without overflow.
inline Element parse_value(const std::string& tok, const PrimeField& f, std::size_t line) {
  std::size_t i = 0;
  bool neg = false;
  if (i < tok.size() && (tok[i] == '-' || tok[i] == '+')) neg = tok[i++] == '-';
  if (i == tok.size()) throw ParseError(line, "value '" + tok + "' is not an integer");
  const auto p = static_cast<unsigned __int128>(f.characteristic());
  unsigned __int128 acc = 0;
  for (; i < tok.size(); ++i) {
    if (tok[i] < '0' || tok[i] > '9') throw ParseError(line, "value '" + tok + "' is not an integer");
    acc = (acc * 10 + static_cast<unsigned>(tok[i] - '0')) % p;
  }
  const Element v = f.from_unsigned(static_cast<std::uint64_t>(acc));
  return neg ? f.neg(v) : v;
}

}  // namespace detail

/// SMS: "m n M" header, 1-based "i j v" triplets, "0 0 0" terminator.
inline SparseMatrix read_sms(std::istream& in, const PrimeField& f) {
  detail::LineReader lr(in);
  std::string line;
  if (!lr.next(line, false)) throw ParseError(lr.line(), "missing SMS header");
  auto h = detail::split_tokens(line);
  if (h.size() != 3) throw ParseError(lr.line(), "SMS header must be 'rows cols M'");
  const std::size_t m = detail::parse_index(h[0], lr.line());
  const std::size_t n = detail::parse_index(h[1], lr.line());
  std::vector<Triplet> t;
  for (;;) {
    if (!lr.next(line, false)) throw ParseError(lr.line(), "missing '0 0 0' terminator");
    auto tok = detail::split_tokens(line);
    if (tok.size() != 3) throw ParseError(lr.line(), "expected 'i j v'");
    const std::size_t i = detail::parse_index(tok[0], lr.line());
    const std::size_t j = detail::parse_index(tok[1], lr.line());
    const Element v = detail::parse_value(tok[2], f, lr.line());
    if (i == 0 && j == 0) break;
    if (i == 0 || j == 0 || i > m || j > n) throw ParseError(lr.line(), "index out of bounds");
    t.push_back({i - 1, j - 1, v});
  }
  return SparseMatrix::from_triplets(f, m, n, std::move(t));
}

inline void write_sms(const SparseMatrix& a, std::ostream& out) {
  out << a.rows() << ' ' << a.cols() << " M\n";
  for (const auto& t : a.triplets()) out << t.row + 1 << ' ' << t.col + 1 << ' ' << t.value << '\n';
  out << "0 0 0\n";
}

inline SparseMatrix read_matrix_market(std::istream& in, const PrimeField& f) {
  detail::LineReader lr(in);
  std::string line;
  if (!lr.next(line, false)) throw ParseError(lr.line(), "missing MatrixMarket banner");
  auto banner = detail::split_tokens(line);
  for (auto& s : banner)
    for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (banner.size() != 5 || banner[0] != "%%matrixmarket" || banner[1] != "matrix" || banner[2] != "coordinate" ||
      banner[3] != "integer" || banner[4] != "general") {
    throw ParseError(lr.line(), "only 'matrix coordinate integer general' is supported");
  }
  if (!lr.next(line, true)) throw ParseError(lr.line(), "missing size line");
  auto h = detail::split_tokens(line);
  if (h.size() != 3) throw ParseError(lr.line(), "size line must be 'rows cols nnz'");
  const std::size_t m = detail::parse_index(h[0], lr.line());
  const std::size_t n = detail::parse_index(h[1], lr.line());
  const std::size_t nnz = detail::parse_index(h[2], lr.line());
  std::vector<Triplet> t;
  t.reserve(nnz);
  for (std::size_t k = 0; k < nnz; ++k) {
    if (!lr.next(line, true)) throw ParseError(lr.line(), "fewer entries than declared");
    auto tok = detail::split_tokens(line);
    if (tok.size() != 3) throw ParseError(lr.line(), "expected 'i j v'");
    const std::size_t i = detail::parse_index(tok[0], lr.line());
    const std::size_t j = detail::parse_index(tok[1], lr.line());
    if (i == 0 || j == 0 || i > m || j > n) throw ParseError(lr.line(), "index out of bounds");
    t.push_back({i - 1, j - 1, detail::parse_value(tok[2], f, lr.line())});
  }
  if (lr.next(line, true)) throw ParseError(lr.line(), "more entries than declared");
  return SparseMatrix::from_triplets(f, m, n, std::move(t));
}

inline void write_matrix_market(const SparseMatrix& a, std::ostream& out) {
  out << "%%MatrixMarket matrix coordinate integer general\n";
  out << a.rows() << ' ' << a.cols() << ' ' << a.nnz() << '\n';
  for (const auto& t : a.triplets()) out << t.row + 1 << ' ' << t.col + 1 << ' ' << t.value << '\n';
}

/// "m n" header then m lines of n integers.
inline DenseMatrix read_dense_text(std::istream& in, const PrimeField& f) {
  detail::LineReader lr(in);
  std::string line;
  if (!lr.next(line, true)) throw ParseError(lr.line(), "missing 'rows cols' header");
  auto h = detail::split_tokens(line);
  if (h.size() != 2) throw ParseError(lr.line(), "header must be 'rows cols'");
  const std::size_t m = detail::parse_index(h[0], lr.line());
  const std::size_t n = detail::parse_index(h[1], lr.line());
  DenseMatrix a(f, m, n);
  for (std::size_t i = 0; i < m; ++i) {
    if (!lr.next(line, true)) throw ParseError(lr.line(), "fewer rows than declared");
    auto tok = detail::split_tokens(line);
    if (tok.size() != n) throw ParseError(lr.line(), "expected " + std::to_string(n) + " values");
    for (std::size_t j = 0; j < n; ++j) a(i, j) = detail::parse_value(tok[j], f, lr.line());
  }
  if (lr.next(line, true)) throw ParseError(lr.line(), "more rows than declared");
  return a;
}

inline void write_dense_text(const DenseMatrix& a, std::ostream& out) {
  out << a.rows() << ' ' << a.cols() << '\n';
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out << (j ? " " : "") << a(i, j);
    out << '\n';
  }
}

using AnyMatrix = std::variant<DenseMatrix, SparseMatrix>;

inline AnyMatrix read_matrix(std::istream& in, MatrixFormat fmt, const PrimeField& f) {
  switch (fmt) {
    case MatrixFormat::Sms:
      return read_sms(in, f);
    case MatrixFormat::MatrixMarket:
      return read_matrix_market(in, f);
    case MatrixFormat::DenseText:
      return read_dense_text(in, f);
  }
  throw ConfigError("unknown matrix format");
}

inline void write_matrix(const AnyMatrix& a, std::ostream& out, MatrixFormat fmt) {
  const auto sparse = [&]() {
    return std::holds_alternative<SparseMatrix>(a) ? std::get<SparseMatrix>(a)
                                                    : SparseMatrix::from_dense(std::get<DenseMatrix>(a));
  };
  switch (fmt) {
    case MatrixFormat::Sms:
      write_sms(sparse(), out);
      return;
    case MatrixFormat::MatrixMarket:
      write_matrix_market(sparse(), out);
      return;
    case MatrixFormat::DenseText:
      write_dense_text(std::holds_alternative<DenseMatrix>(a) ? std::get<DenseMatrix>(a)
                                                               : std::get<SparseMatrix>(a).to_dense(),
                       out);
      return;
  }
}

inline DenseMatrix to_dense(const AnyMatrix& a) {
  return std::holds_alternative<DenseMatrix>(a) ? std::get<DenseMatrix>(a) : std::get<SparseMatrix>(a).to_dense();
}

inline SparseMatrix to_sparse(const AnyMatrix& a) {
  return std::holds_alternative<SparseMatrix>(a) ? std::get<SparseMatrix>(a)
                                                  : SparseMatrix::from_dense(std::get<DenseMatrix>(a));
}

/// Right-hand side: dense text with a single column, or a bare list of
/// values (one or more per line).
inline Vector read_vector(std::istream& in, const PrimeField& f) {
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  {
    std::istringstream probe(text);
    detail::LineReader lr(probe);
    std::string first;
    if (lr.next(first, true)) {
      auto h = detail::split_tokens(first);
      if (h.size() == 2 && h[1] == "1") {
        std::istringstream again(text);
        const DenseMatrix m = read_dense_text(again, f);
        Vector v(m.rows());
        for (std::size_t i = 0; i < m.rows(); ++i) v[i] = m(i, 0);
        return v;
      }
    }
  }
  std::istringstream again(text);
  detail::LineReader lr(again);
  Vector v;
  for (std::string line; lr.next(line, true);)
    for (const auto& tok : detail::split_tokens(line)) v.push_back(detail::parse_value(tok, f, lr.line()));
  return v;
}

inline void write_vector(std::span<const Element> v, std::ostream& out) {
  out << v.size() << " 1\n";
  for (auto x : v) out << x << '\n';
}

}  // namespace ffla

#endif  // FFLA_MATRIX_IO_HPP
