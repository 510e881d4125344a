#ifndef FFLA_MATRIX_PERMUTATION_HPP
#define FFLA_MATRIX_PERMUTATION_HPP

#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "ffla/matrix/dense_matrix.hpp"

namespace ffla {

/// Permutation of {0..n-1}.
///
/// As a matrix P, column j holds a one in row images()[j], i.e.
/// P e_j = e_{images[j]}. Hence (P^T A) row j is A row images[j].
///
/// A permutation built from a transposition sequence t_0, t_1, ... stands
/// for the product T(0,t_0) T(1,t_1) ... and keeps that sequence, so
/// applying P^T to rows is the LAPACK-style forward sweep of swaps.
class Permutation {
 public:
  explicit Permutation(std::size_t n = 0) : images_(n) {
    std::iota(images_.begin(), images_.end(), std::size_t{0});
  }

  static Permutation identity(std::size_t n) { return Permutation(n); }

  /// `images` must be a bijection on {0..n-1}.
  static Permutation from_images(std::vector<std::size_t> images) {
    std::vector<bool> seen(images.size(), false);
    for (auto v : images) {
      if (v >= images.size() || seen[v]) throw DomainError("permutation images are not a bijection");
      seen[v] = true;
    }
    Permutation p;
    p.images_ = std::move(images);
    return p;
  }

  /// Transposition i <-> pivots[i] for i = 0..pivots.size()-1.
  static Permutation from_transpositions(std::size_t n, std::vector<std::size_t> pivots) {
    detail::require_dims(pivots.size() <= n, "more transpositions than points");
    Permutation p(n);
    for (std::size_t i = pivots.size(); i-- > 0;) {
      detail::require_dims(pivots[i] < n && pivots[i] >= i, "transposition index out of range");
    }
    // images[j] = T_0 T_1 ... T_{s-1} (j): apply the last transposition first.
    for (auto& img : p.images_) {
      for (std::size_t i = pivots.size(); i-- > 0;) {
        if (img == i) {
          img = pivots[i];
        } else if (img == pivots[i]) {
          img = i;
        }
      }
    }
    p.transpositions_ = std::move(pivots);
    return p;
  }

  std::size_t size() const noexcept { return images_.size(); }
  const std::vector<std::size_t>& images() const noexcept { return images_; }
  const std::optional<std::vector<std::size_t>>& transpositions() const noexcept {
    return transpositions_;
  }

  std::size_t operator[](std::size_t j) const noexcept { return images_[j]; }

  Permutation inverse() const {
    std::vector<std::size_t> inv(images_.size());
    for (std::size_t j = 0; j < images_.size(); ++j) inv[images_[j]] = j;
    Permutation p;
    p.images_ = std::move(inv);
    return p;
  }

  /// Matrix product (*this) * other.
  Permutation compose(const Permutation& other) const {
    detail::require_dims(size() == other.size(), "permutation size mismatch");
    std::vector<std::size_t> img(size());
    for (std::size_t j = 0; j < size(); ++j) img[j] = images_[other.images_[j]];
    Permutation p;
    p.images_ = std::move(img);
    return p;
  }

  /// +1 or -1.
  int sign() const {
    if (transpositions_) {
      int s = 1;
      for (std::size_t i = 0; i < transpositions_->size(); ++i)
        if ((*transpositions_)[i] != i) s = -s;
      return s;
    }
    std::vector<bool> seen(size(), false);
    int s = 1;
    for (std::size_t i = 0; i < size(); ++i) {
      if (seen[i]) continue;
      std::size_t len = 0;
      for (std::size_t j = i; !seen[j]; j = images_[j]) {
        seen[j] = true;
        ++len;
      }
      if (len % 2 == 0) s = -s;
    }
    return s;
  }

  /// P * A (rows of A moved: row j goes to row images[j]).
  DenseMatrix apply_rows(const DenseMatrix& a) const {
    detail::require_dims(a.rows() == size(), "row permutation size mismatch");
    DenseMatrix r(a.field(), a.rows(), a.cols());
    for (std::size_t j = 0; j < size(); ++j) {
      auto src = a.row(j);
      std::copy(src.begin(), src.end(), r.row(images_[j]).begin());
    }
    return r;
  }

  /// P^T * A (row j of the result is row images[j] of A).
  DenseMatrix apply_rows_transpose(const DenseMatrix& a) const {
    detail::require_dims(a.rows() == size(), "row permutation size mismatch");
    DenseMatrix r(a.field(), a.rows(), a.cols());
    for (std::size_t j = 0; j < size(); ++j) {
      auto src = a.row(images_[j]);
      std::copy(src.begin(), src.end(), r.row(j).begin());
    }
    return r;
  }

  /// A * P (column j of the result is column images[j] of A).
  DenseMatrix apply_cols(const DenseMatrix& a) const {
    detail::require_dims(a.cols() == size(), "column permutation size mismatch");
    DenseMatrix r(a.field(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < size(); ++j) r(i, j) = a(i, images_[j]);
    return r;
  }

  /// A * P^T (column j of A goes to column images[j]).
  DenseMatrix apply_cols_transpose(const DenseMatrix& a) const {
    detail::require_dims(a.cols() == size(), "column permutation size mismatch");
    DenseMatrix r(a.field(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < size(); ++j) r(i, images_[j]) = a(i, j);
    return r;
  }

  /// P x for a vector (entry j moves to images[j]).
  template <class T>
  std::vector<T> apply(const std::vector<T>& x) const {
    detail::require_dims(x.size() == size(), "permutation size mismatch");
    std::vector<T> y(x.size());
    for (std::size_t j = 0; j < size(); ++j) y[images_[j]] = x[j];
    return y;
  }

  /// P^T x for a vector.
  template <class T>
  std::vector<T> apply_transpose(const std::vector<T>& x) const {
    detail::require_dims(x.size() == size(), "permutation size mismatch");
    std::vector<T> y(x.size());
    for (std::size_t j = 0; j < size(); ++j) y[j] = x[images_[j]];
    return y;
  }

  DenseMatrix to_dense(const PrimeField& field) const {
    DenseMatrix m(field, size(), size());
    for (std::size_t j = 0; j < size(); ++j) m(images_[j], j) = 1;
    return m;
  }

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.images_ == b.images_; }

 private:
  std::vector<std::size_t> images_;
  std::optional<std::vector<std::size_t>> transpositions_;
};

}  // namespace ffla

#endif  // FFLA_MATRIX_PERMUTATION_HPP
