#ifndef FFLA_MATRIX_VIEW_HPP
#define FFLA_MATRIX_VIEW_HPP

#include <cassert>
#include <cstddef>
#include <span>
#include <type_traits>

namespace ffla {

/// Non-owning strided row-major window onto a matrix buffer.
template <class T>
class BasicMatrixView {
 public:
  using value_type = std::remove_const_t<T>;

  BasicMatrixView() = default;
  BasicMatrixView(T* data, std::size_t rows, std::size_t cols, std::size_t stride)
      : data_(data), rows_(rows), cols_(cols), stride_(stride) {}

  // Mutable view converts to const view.
  template <class U, class = std::enable_if_t<std::is_same_v<const U, T> && !std::is_same_v<U, T>>>
  BasicMatrixView(const BasicMatrixView<U>& o)  // NOLINT(google-explicit-constructor)
      : data_(o.data()), rows_(o.rows()), cols_(o.cols()), stride_(o.stride()) {}

  T* data() const noexcept { return data_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t stride() const noexcept { return stride_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  T& operator()(std::size_t i, std::size_t j) const noexcept {
    assert(i < rows_ && j < cols_);
    return data_[i * stride_ + j];
  }

  std::span<T> row(std::size_t i) const noexcept { return {data_ + i * stride_, cols_}; }

  BasicMatrixView block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const noexcept {
    assert(r0 + nr <= rows_ && c0 + nc <= cols_);
    if (nr == 0 || nc == 0) return BasicMatrixView(data_, nr, nc, stride_);
    return BasicMatrixView(data_ + r0 * stride_ + c0, nr, nc, stride_);
  }

  BasicMatrixView rows_range(std::size_t r0, std::size_t nr) const noexcept { return block(r0, 0, nr, cols_); }
  BasicMatrixView cols_range(std::size_t c0, std::size_t nc) const noexcept { return block(0, c0, rows_, nc); }

 private:
  T* data_ = nullptr;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
};

}  // namespace ffla

#endif  // FFLA_MATRIX_VIEW_HPP
