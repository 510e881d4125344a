#ifndef FFLA_MATRIX_DENSE_MATRIX_HPP
#define FFLA_MATRIX_DENSE_MATRIX_HPP

#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "ffla/field/prime_field.hpp"
#include "ffla/matrix/view.hpp"

namespace ffla {

using MatrixView = BasicMatrixView<Element>;
using ConstMatrixView = BasicMatrixView<const Element>;

/// Row-major dense matrix over a prime field. Entries are always canonical
/// for the attached field context.
class DenseMatrix {
 public:
  explicit DenseMatrix(const PrimeField& field, std::size_t rows = 0, std::size_t cols = 0)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  /// Entries are reduced into canonical range.
  DenseMatrix(const PrimeField& field, std::initializer_list<std::initializer_list<std::int64_t>> rows)
      : field_(field), rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      detail::require_dims(r.size() == cols_, "ragged initializer rows");
      for (auto v : r) data_.push_back(field_.reduce(v));
    }
  }

  static DenseMatrix identity(const PrimeField& field, std::size_t n) {
    DenseMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static DenseMatrix from_view(const PrimeField& field, ConstMatrixView v) {
    DenseMatrix m(field, v.rows(), v.cols());
    for (std::size_t i = 0; i < v.rows(); ++i) {
      auto src = v.row(i);
      std::copy(src.begin(), src.end(), m.row(i).begin());
    }
    return m;
  }

  static DenseMatrix random(const PrimeField& field, std::size_t rows, std::size_t cols, Rng& rng) {
    DenseMatrix m(field, rows, cols);
    for (auto& x : m.data_) x = field.random(rng);
    return m;
  }

  const PrimeField& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Element& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
  Element operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }

  std::span<Element> row(std::size_t i) noexcept { return {data_.data() + i * cols_, cols_}; }
  std::span<const Element> row(std::size_t i) const noexcept { return {data_.data() + i * cols_, cols_}; }

  std::span<const Element> data() const noexcept { return data_; }
  std::span<Element> data() noexcept { return data_; }

  MatrixView view() noexcept { return {data_.data(), rows_, cols_, cols_}; }
  ConstMatrixView view() const noexcept { return {data_.data(), rows_, cols_, cols_}; }

  bool is_zero() const noexcept {
    for (auto x : data_)
      if (x != 0) return false;
    return true;
  }

  DenseMatrix transpose() const {
    DenseMatrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  DenseMatrix submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    return from_view(field_, view().block(r0, c0, nr, nc));
  }

  /// y = A x
  Vector apply(std::span<const Element> x) const {
    detail::require_dims(x.size() == cols_, "matvec: dimension mismatch");
    Vector y(rows_, 0);
    const bool narrow = field_.characteristic() < (std::uint64_t{1} << 31);
    for (std::size_t i = 0; i < rows_; ++i) {
      const auto r = row(i);
      if (narrow) {
        // |products| < 2^62, so 2^60 of them fit in the 128-bit accumulator.
        __int128 acc = 0;
        for (std::size_t j = 0; j < cols_; ++j) acc += static_cast<__int128>(r[j]) * x[j];
        y[i] = field_.reduce(acc);
      } else {
        Element acc = 0;
        for (std::size_t j = 0; j < cols_; ++j) acc = field_.axpy(r[j], x[j], acc);
        y[i] = acc;
      }
    }
    return y;
  }

  /// y = A^T x
  Vector apply_transpose(std::span<const Element> x) const {
    detail::require_dims(x.size() == rows_, "transpose matvec: dimension mismatch");
    Vector y(cols_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (x[i] == 0) continue;
      const auto r = row(i);
      for (std::size_t j = 0; j < cols_; ++j) y[j] = field_.axpy(r[j], x[i], y[j]);
    }
    return y;
  }

  /// Same matrix expressed in another representation of the same field.
  DenseMatrix converted(const PrimeField& target) const {
    DenseMatrix m(target, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = target.convert(data_[i], field_);
    return m;
  }

  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const DenseMatrix& a, const DenseMatrix& b) { return !(a == b); }

 private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Element> data_;
};

}  // namespace ffla

#endif  // FFLA_MATRIX_DENSE_MATRIX_HPP
