#ifndef FFLA_MATRIX_SPARSE_MATRIX_HPP
#define FFLA_MATRIX_SPARSE_MATRIX_HPP

#include <algorithm>
#include <span>
#include <tuple>
#include <utility>
#include <vector>

#include "ffla/matrix/dense_matrix.hpp"

namespace ffla {

struct SparseEntry {
  std::size_t col;
  Element value;

  friend bool operator==(const SparseEntry&, const SparseEntry&) = default;
};

using SparseRow = std::vector<SparseEntry>;

struct Triplet {
  std::size_t row;
  std::size_t col;
  Element value;
};

/// Row-wise coordinate storage. Each row is sorted by column with no
/// explicit zeros.
class SparseMatrix {
 public:
  explicit SparseMatrix(const PrimeField& field, std::size_t rows = 0, std::size_t cols = 0)
      : field_(field), cols_(cols), rows_(rows) {}

  /// Duplicate positions are summed; values are reduced into canonical range.
  static SparseMatrix from_triplets(const PrimeField& field, std::size_t rows, std::size_t cols,
                                    std::vector<Triplet> triplets) {
    SparseMatrix m(field, rows, cols);
    std::sort(triplets.begin(), triplets.end(), [](const Triplet& a, const Triplet& b) {
      return std::tie(a.row, a.col) < std::tie(b.row, b.col);
    });
    for (std::size_t i = 0; i < triplets.size();) {
      const auto [r, c, _] = triplets[i];
      detail::require_dims(r < rows && c < cols, "triplet index out of bounds");
      Element acc = 0;
      for (; i < triplets.size() && triplets[i].row == r && triplets[i].col == c; ++i) {
        acc = field.add(acc, field.reduce(triplets[i].value));
      }
      if (acc != 0) m.rows_[r].push_back({c, acc});
    }
    return m;
  }

  static SparseMatrix from_dense(const DenseMatrix& a) {
    SparseMatrix m(a.field(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j)
        if (a(i, j) != 0) m.rows_[i].push_back({j, a(i, j)});
    return m;
  }

  static SparseMatrix identity(const PrimeField& field, std::size_t n) {
    SparseMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.rows_[i].push_back({i, 1});
    return m;
  }

  /// Each entry is nonzero independently with probability `density`.
  static SparseMatrix random(const PrimeField& field, std::size_t rows, std::size_t cols, double density,
                             Rng& rng) {
    SparseMatrix m(field, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        if (rng.uniform_real() < density) m.rows_[i].push_back({j, field.random_nonzero(rng)});
    return m;
  }

  const PrimeField& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }

  const SparseRow& row(std::size_t i) const noexcept { return rows_[i]; }

  /// Replaces row i; the row must be sorted, in range and zero-free.
  void set_row(std::size_t i, SparseRow r) {
    for (std::size_t t = 0; t < r.size(); ++t) {
      detail::require_dims(r[t].col < cols_, "column out of bounds");
      if (t > 0 && r[t - 1].col >= r[t].col) throw DomainError("sparse row not strictly increasing");
      if (r[t].value == 0 || !field_.is_canonical(r[t].value)) throw DomainError("invalid sparse value");
    }
    rows_[i] = std::move(r);
  }

  Element at(std::size_t i, std::size_t j) const {
    const auto& r = rows_[i];
    auto it = std::lower_bound(r.begin(), r.end(), j, [](const SparseEntry& e, std::size_t c) { return e.col < c; });
    return (it != r.end() && it->col == j) ? it->value : 0;
  }

  std::size_t nnz() const noexcept {
    std::size_t s = 0;
    for (const auto& r : rows_) s += r.size();
    return s;
  }

  double density() const noexcept {
    const double total = static_cast<double>(rows()) * static_cast<double>(cols_);
    return total == 0 ? 0.0 : static_cast<double>(nnz()) / total;
  }

  Vector apply(std::span<const Element> x) const {
    detail::require_dims(x.size() == cols_, "sparse matvec: dimension mismatch");
    Vector y(rows(), 0);
    for (std::size_t i = 0; i < rows(); ++i) {
      Element acc = 0;
      for (const auto& e : rows_[i]) acc = field_.axpy(e.value, x[e.col], acc);
      y[i] = acc;
    }
    return y;
  }

  Vector apply_transpose(std::span<const Element> x) const {
    detail::require_dims(x.size() == rows(), "sparse transpose matvec: dimension mismatch");
    Vector y(cols_, 0);
    for (std::size_t i = 0; i < rows(); ++i) {
      if (x[i] == 0) continue;
      for (const auto& e : rows_[i]) y[e.col] = field_.axpy(e.value, x[i], y[e.col]);
    }
    return y;
  }

  SparseMatrix transpose() const {
    SparseMatrix t(field_, cols_, rows());
    for (std::size_t i = 0; i < rows(); ++i)
      for (const auto& e : rows_[i]) t.rows_[e.col].push_back({i, e.value});
    return t;
  }

  DenseMatrix to_dense() const {
    DenseMatrix d(field_, rows(), cols_);
    for (std::size_t i = 0; i < rows(); ++i)
      for (const auto& e : rows_[i]) d(i, e.col) = e.value;
    return d;
  }

  std::vector<Triplet> triplets() const {
    std::vector<Triplet> t;
    t.reserve(nnz());
    for (std::size_t i = 0; i < rows(); ++i)
      for (const auto& e : rows_[i]) t.push_back({i, e.col, e.value});
    return t;
  }

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    return a.field_ == b.field_ && a.cols_ == b.cols_ && a.rows_ == b.rows_;
  }

 private:
  PrimeField field_;
  std::size_t cols_;
  std::vector<SparseRow> rows_;
};

}  // namespace ffla

#endif  // FFLA_MATRIX_SPARSE_MATRIX_HPP
