// Copyright 2026 The netbin Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "netbin/integer.hpp"
#include "netbin/poly.hpp"
#include "netbin/ring.hpp"

namespace netbin {

/// Raised for dimension mismatches and non-square inputs.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dense row-major matrix over a ring. Indices are 0-based; rows and cols
/// are both at least one.
template <class R>
class Matrix {
 public:
  using value_type = R;

  Matrix(std::size_t rows, std::size_t cols, const R& fill)
      : rows_(rows), cols_(cols), data_(checked_size(rows, cols), fill) {}

  Matrix(std::size_t rows, std::size_t cols, std::vector<R> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != checked_size(rows, cols))
      throw ShapeError("matrix data size does not match its shape");
  }

  Matrix(std::initializer_list<std::initializer_list<R>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    checked_size(rows_, cols_);
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) throw ShapeError("ragged matrix literal");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n, const R& like) {
    Matrix m(n, n, zero_like(like));
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one_like(like);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  R& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const R& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const R> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<const R> data() const { return data_; }

  Matrix transpose() const {
    Matrix t(cols_, rows_, data_.front());
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  template <class F>
  auto map(F f) const -> Matrix<decltype(f(std::declval<const R&>()))> {
    using S = decltype(f(std::declval<const R&>()));
    std::vector<S> out;
    out.reserve(data_.size());
    for (const auto& v : data_) out.push_back(f(v));
    return Matrix<S>(rows_, cols_, std::move(out));
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  static std::size_t checked_size(std::size_t rows, std::size_t cols) {
    if (rows == 0 || cols == 0) throw ShapeError("matrix dimensions must be positive");
    return rows * cols;
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<R> data_;
};

using IntMatrix = Matrix<Integer>;
using ZPolyMatrix = Matrix<ZPoly>;
using RatMatrix = Matrix<Rational>;
using ModMatrix = Matrix<ModInt>;

/// Exact product. Zero entries of the left factor are skipped, which pays off
/// on the half-empty binomial matrices this library works with.
template <class R>
Matrix<R> mat_mul(const Matrix<R>& a, const Matrix<R>& b) {
  if (a.cols() != b.rows())
    throw ShapeError("mat_mul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                     " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  Matrix<R> out(a.rows(), b.cols(), zero_like(a(0, 0)));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t s = 0; s < a.cols(); ++s) {
      const R& left = a(i, s);
      if (is_zero(left)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) ring_traits<R>::multiply_add(out(i, j), left, b(s, j));
    }
  }
  return out;
}

template <class R>
Matrix<R> operator*(const Matrix<R>& a, const Matrix<R>& b) {
  return mat_mul(a, b);
}

template <class R>
std::vector<R> mat_vec(const Matrix<R>& a, std::span<const R> v) {
  if (a.cols() != v.size()) throw ShapeError("mat_vec: dimension mismatch");
  std::vector<R> out(a.rows(), zero_like(a(0, 0)));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) ring_traits<R>::multiply_add(out[i], a(i, j), v[j]);
  return out;
}

/// A^e by binary exponentiation; A^0 = I.
template <class R>
Matrix<R> mat_pow(const Matrix<R>& a, unsigned long e) {
  if (!a.is_square()) throw ShapeError("mat_pow: matrix is not square");
  Matrix<R> result = Matrix<R>::identity(a.rows(), a(0, 0));
  if (e == 0) return result;
  Matrix<R> base = a;
  bool first = true;
  while (e != 0) {
    if (e & 1UL) {
      result = first ? base : mat_mul(result, base);
      first = false;
    }
    e >>= 1;
    if (e != 0) base = mat_mul(base, base);
  }
  return result;
}

/// Walks A^1, A^2, ... by repeated multiplication; the verifiers that need
/// every power up to some bound use this instead of re-powering.
template <class R>
class PowerSequence {
 public:
  explicit PowerSequence(Matrix<R> a) : base_(std::move(a)), current_(base_) {
    if (!base_.is_square()) throw ShapeError("PowerSequence: matrix is not square");
  }

  unsigned long exponent() const { return exponent_; }
  const Matrix<R>& current() const { return current_; }

  const Matrix<R>& advance() {
    current_ = mat_mul(current_, base_);
    ++exponent_;
    return current_;
  }

 private:
  Matrix<R> base_;
  Matrix<R> current_;
  unsigned long exponent_ = 1;
};

/// Evaluates an integer-polynomial matrix at a point of any ring.
template <class S>
Matrix<S> evaluate(const ZPolyMatrix& a, const S& at) {
  return a.map([&](const ZPoly& p) { return p.evaluate(at); });
}

/// Reduces an integer matrix modulo p.
ModMatrix reduce_mod(const IntMatrix& a, std::uint64_t p);

}  // namespace netbin
