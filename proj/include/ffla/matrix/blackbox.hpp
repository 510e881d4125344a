#ifndef FFLA_MATRIX_BLACKBOX_HPP
#define FFLA_MATRIX_BLACKBOX_HPP

#include <memory>
#include <span>
#include <utility>

#include "ffla/matrix/sparse_matrix.hpp"

namespace ffla {

/// A linear map accessed only through products with vectors.
class BlackboxOperator {
 public:
  virtual ~BlackboxOperator() = default;

  virtual std::size_t rows() const = 0;
  virtual std::size_t cols() const = 0;
  virtual const PrimeField& field() const = 0;

  virtual Vector apply(std::span<const Element> x) const = 0;
  virtual Vector apply_transpose(std::span<const Element> x) const = 0;

  /// Number of apply/apply_transpose calls made so far.
  std::size_t applications() const noexcept { return applications_; }
  void reset_applications() const noexcept { applications_ = 0; }

 protected:
  void count_application() const noexcept { ++applications_; }

 private:
  mutable std::size_t applications_ = 0;
};

class SparseBlackbox final : public BlackboxOperator {
 public:
  explicit SparseBlackbox(const SparseMatrix& a) : a_(&a) {}

  std::size_t rows() const override { return a_->rows(); }
  std::size_t cols() const override { return a_->cols(); }
  const PrimeField& field() const override { return a_->field(); }

  Vector apply(std::span<const Element> x) const override {
    count_application();
    return a_->apply(x);
  }
  Vector apply_transpose(std::span<const Element> x) const override {
    count_application();
    return a_->apply_transpose(x);
  }

 private:
  const SparseMatrix* a_;
};

class DenseBlackbox final : public BlackboxOperator {
 public:
  explicit DenseBlackbox(const DenseMatrix& a) : a_(&a) {}

  std::size_t rows() const override { return a_->rows(); }
  std::size_t cols() const override { return a_->cols(); }
  const PrimeField& field() const override { return a_->field(); }

  Vector apply(std::span<const Element> x) const override {
    count_application();
    return a_->apply(x);
  }
  Vector apply_transpose(std::span<const Element> x) const override {
    count_application();
    return a_->apply_transpose(x);
  }

 private:
  const DenseMatrix* a_;
};

/// x -> A (B x).
class ComposedBlackbox final : public BlackboxOperator {
 public:
  ComposedBlackbox(const BlackboxOperator& a, const BlackboxOperator& b) : a_(&a), b_(&b) {
    detail::require_dims(a.cols() == b.rows(), "composition: dimension mismatch");
  }

  std::size_t rows() const override { return a_->rows(); }
  std::size_t cols() const override { return b_->cols(); }
  const PrimeField& field() const override { return a_->field(); }

  Vector apply(std::span<const Element> x) const override {
    count_application();
    return a_->apply(b_->apply(x));
  }
  Vector apply_transpose(std::span<const Element> x) const override {
    count_application();
    return b_->apply_transpose(a_->apply_transpose(x));
  }

 private:
  const BlackboxOperator* a_;
  const BlackboxOperator* b_;
};

/// Diagonal scaling diag(d).
class DiagonalBlackbox final : public BlackboxOperator {
 public:
  DiagonalBlackbox(const PrimeField& field, Vector d) : field_(field), d_(std::move(d)) {}

  std::size_t rows() const override { return d_.size(); }
  std::size_t cols() const override { return d_.size(); }
  const PrimeField& field() const override { return field_; }
  const Vector& diagonal() const noexcept { return d_; }

  Vector apply(std::span<const Element> x) const override {
    count_application();
    detail::require_dims(x.size() == d_.size(), "diagonal: dimension mismatch");
    Vector y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) y[i] = field_.mul(d_[i], x[i]);
    return y;
  }
  Vector apply_transpose(std::span<const Element> x) const override { return apply(x); }

 private:
  PrimeField field_;
  Vector d_;
};

/// x -> A x + U (V x) for U n x k, V k x n.
class RankUpdateBlackbox final : public BlackboxOperator {
 public:
  RankUpdateBlackbox(const BlackboxOperator& a, DenseMatrix u, DenseMatrix v)
      : a_(&a), u_(std::move(u)), v_(std::move(v)) {
    detail::require_dims(u_.rows() == a.rows() && v_.cols() == a.cols() && u_.cols() == v_.rows(),
                         "rank update: dimension mismatch");
  }

  std::size_t rows() const override { return a_->rows(); }
  std::size_t cols() const override { return a_->cols(); }
  const PrimeField& field() const override { return a_->field(); }

  Vector apply(std::span<const Element> x) const override {
    count_application();
    Vector y = a_->apply(x);
    const Vector w = u_.apply(v_.apply(x));
    for (std::size_t i = 0; i < y.size(); ++i) y[i] = field().add(y[i], w[i]);
    return y;
  }
  Vector apply_transpose(std::span<const Element> x) const override {
    count_application();
    Vector y = a_->apply_transpose(x);
    const Vector w = v_.apply_transpose(u_.apply_transpose(x));
    for (std::size_t i = 0; i < y.size(); ++i) y[i] = field().add(y[i], w[i]);
    return y;
  }

 private:
  const BlackboxOperator* a_;
  DenseMatrix u_;
  DenseMatrix v_;
};

/// x -> A^T x.
class TransposeBlackbox final : public BlackboxOperator {
 public:
  explicit TransposeBlackbox(const BlackboxOperator& a) : a_(&a) {}

  std::size_t rows() const override { return a_->cols(); }
  std::size_t cols() const override { return a_->rows(); }
  const PrimeField& field() const override { return a_->field(); }

  Vector apply(std::span<const Element> x) const override {
    count_application();
    return a_->apply_transpose(x);
  }
  Vector apply_transpose(std::span<const Element> x) const override {
    count_application();
    return a_->apply(x);
  }

 private:
  const BlackboxOperator* a_;
};

/// Unit upper bidiagonal: ones on the diagonal, u_i at (i, i+1).
class UnitBidiagonalBlackbox final : public BlackboxOperator {
 public:
  UnitBidiagonalBlackbox(const PrimeField& field, Vector super) : field_(field), u_(std::move(super)) {}

  std::size_t rows() const override { return u_.size() + 1; }
  std::size_t cols() const override { return u_.size() + 1; }
  const PrimeField& field() const override { return field_; }
  const Vector& superdiagonal() const noexcept { return u_; }

  Vector apply(std::span<const Element> x) const override {
    count_application();
    detail::require_dims(x.size() == rows(), "bidiagonal: dimension mismatch");
    Vector y(x.begin(), x.end());
    for (std::size_t i = 0; i < u_.size(); ++i) y[i] = field_.axpy(u_[i], x[i + 1], y[i]);
    return y;
  }
  Vector apply_transpose(std::span<const Element> x) const override {
    count_application();
    detail::require_dims(x.size() == rows(), "bidiagonal: dimension mismatch");
    Vector y(x.begin(), x.end());
    for (std::size_t i = 0; i < u_.size(); ++i) y[i + 1] = field_.axpy(u_[i], x[i], y[i + 1]);
    return y;
  }

 private:
  PrimeField field_;
  Vector u_;
};

/// Materializes the operator column by column (n applications).
inline DenseMatrix densify(const BlackboxOperator& a) {
  DenseMatrix d(a.field(), a.rows(), a.cols());
  Vector e(a.cols(), 0);
  for (std::size_t j = 0; j < a.cols(); ++j) {
    e[j] = 1;
    const Vector c = a.apply(e);
    for (std::size_t i = 0; i < a.rows(); ++i) d(i, j) = c[i];
    e[j] = 0;
  }
  return d;
}

inline Element dot(const PrimeField& f, std::span<const Element> a, std::span<const Element> b) {
  detail::require_dims(a.size() == b.size(), "dot: length mismatch");
  Element acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc = f.axpy(a[i], b[i], acc);
  return acc;
}

}  // namespace ffla

#endif  // FFLA_MATRIX_BLACKBOX_HPP
