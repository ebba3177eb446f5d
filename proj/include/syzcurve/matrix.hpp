#pragma once

#include <cassert>
#include <cstddef>
#include <span>
#include <vector>

namespace syzcurve {

/// Dense row-major matrix over a field object F.
template <class F>
class Matrix {
 public:
  using Elem = typename F::Element;

  Matrix(F field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), entries_(rows * cols, field_.zero()) {}

  const F& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Elem& operator()(std::size_t r, std::size_t c) {
    assert(r < rows_ && c < cols_);
    return entries_[r * cols_ + c];
  }
  const Elem& operator()(std::size_t r, std::size_t c) const {
    assert(r < rows_ && c < cols_);
    return entries_[r * cols_ + c];
  }

  std::span<Elem> row(std::size_t r) { return {entries_.data() + r * cols_, cols_}; }
  std::span<const Elem> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }

  static Matrix identity(F field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = m.field_.one();
    return m;
  }

 private:
  F field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> entries_;
};

}  // namespace syzcurve
