#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "mbgram/errors.hpp"

namespace mbgram {

/// Dense row-major square matrix.
template <typename T>
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t n) : n_(n), data_(n * n) {}
  SquareMatrix(std::size_t n, std::vector<T> data) : n_(n), data_(std::move(data)) {
    if (data_.size() != n * n) throw InvalidArgument("SquareMatrix: data size is not n*n");
  }

  std::size_t size() const { return n_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  std::span<T> row(std::size_t i) { return {data_.data() + i * n_, n_}; }
  std::span<const T> row(std::size_t i) const { return {data_.data() + i * n_, n_}; }
  const std::vector<T>& data() const { return data_; }

  /// Simultaneous row/column permutation: result(i, j) = (*this)(perm[i], perm[j]).
  SquareMatrix permuted(std::span<const std::size_t> perm) const {
    SquareMatrix out(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) out(i, j) = (*this)(perm[i], perm[j]);
    return out;
  }

  template <typename F>
  auto map(F&& f) const -> SquareMatrix<decltype(f(std::declval<const T&>()))> {
    using U = decltype(f(std::declval<const T&>()));
    std::vector<U> out;
    out.reserve(data_.size());
    for (const auto& v : data_) out.push_back(f(v));
    return SquareMatrix<U>(n_, std::move(out));
  }

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<T> data_;
};

}  // namespace mbgram
