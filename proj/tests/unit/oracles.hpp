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

// Slow, independent reference implementations used only by the tests.

#pragma once

#include <cstdint>
#include <vector>

#include "netbin/integer.hpp"
#include "netbin/matrix.hpp"
#include "netbin/poly.hpp"
#include "netbin/ring.hpp"

namespace oracle {

using netbin::Integer;
using netbin::Matrix;
using netbin::Poly;

// Laplace expansion along the first row.
template <class R>
R det_cofactor(const Matrix<R>& a) {
  const std::size_t n = a.rows();
  if (n == 1) return a(0, 0);
  R total = netbin::zero_like(a(0, 0));
  for (std::size_t c = 0; c < n; ++c) {
    if (netbin::is_zero(a(0, c))) continue;
    Matrix<R> minor(n - 1, n - 1, netbin::zero_like(a(0, 0)));
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0, k = 0; j < n; ++j)
        if (j != c) minor(i - 1, k++) = a(i, j);
    R term = R(a(0, c) * det_cofactor(minor));
    total = c % 2 == 0 ? R(total + term) : R(total - term);
  }
  return total;
}

// det(A - x I) by cofactor expansion over R[x].
template <class R>
Poly<R> charpoly_cofactor(const Matrix<R>& a) {
  const std::size_t n = a.rows();
  Matrix<Poly<R>> shifted(n, n, Poly<R>());
  const R one = netbin::one_like(a(0, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      shifted(i, j) = i == j ? Poly<R>({a(i, j), R(-one)}) : Poly<R>(a(i, j));
  return det_cofactor(shifted);
}

// Schoolbook product without any zero skipping or fused accumulation.
template <class R>
Matrix<R> naive_mul(const Matrix<R>& a, const Matrix<R>& b) {
  Matrix<R> c(a.rows(), b.cols(), netbin::zero_like(a(0, 0)));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      R s = netbin::zero_like(a(0, 0));
      for (std::size_t k = 0; k < a.cols(); ++k) s = R(s + a(i, k) * b(k, j));
      c(i, j) = s;
    }
  return c;
}

template <class R>
Matrix<R> naive_pow(const Matrix<R>& a, unsigned e) {
  Matrix<R> r = Matrix<R>::identity(a.rows(), a(0, 0));
  for (unsigned k = 0; k < e; ++k) r = naive_mul(r, a);
  return r;
}

// T_n(m) straight from the entry formula, with the monomial built by
// repeated multiplication.
inline Matrix<Integer> fib_matrix(long n, const Integer& m) {
  Matrix<Integer> t(static_cast<std::size_t>(n), static_cast<std::size_t>(n), Integer(0));
  for (long i = 1; i <= n; ++i)
    for (long j = 1; j <= n; ++j) {
      if (n - j > i - 1) continue;
      Integer v = netbin::binomial(i - 1, n - j);
      for (long k = 0; k < i + j - n - 1; ++k) v *= m;
      t(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = v;
    }
  return t;
}

// U_e(m) as the (0,1) entry of [[0,1],[1,m]]^e.
inline Integer u(const Integer& m, unsigned e) {
  Matrix<Integer> q{{Integer(0), Integer(1)}, {Integer(1), m}};
  return naive_pow(q, e)(0, 1);
}

inline Matrix<Integer> reduce(const Matrix<Integer>& a, std::uint64_t p) {
  const Integer mod(static_cast<unsigned long>(p));
  return a.map([&](const Integer& v) {
    Integer q = v % mod;
    return q < 0 ? Integer(q + mod) : q;
  });
}

// A^e mod p by e reduced schoolbook products.
inline Matrix<Integer> pow_mod(const Matrix<Integer>& a, unsigned e, std::uint64_t p) {
  Matrix<Integer> r = Matrix<Integer>::identity(a.rows(), Integer(0));
  for (unsigned k = 0; k < e; ++k) r = reduce(naive_mul(r, a), p);
  return r;
}

inline bool is_identity(const Matrix<Integer>& a) {
  return a == Matrix<Integer>::identity(a.rows(), Integer(0));
}

// Least t >= 1 with A^t = I mod p, by walking powers.
inline unsigned order_brute(const Matrix<Integer>& a, std::uint64_t p, unsigned limit = 100000) {
  Matrix<Integer> r = reduce(a, p);
  for (unsigned t = 1; t <= limit; ++t, r = reduce(naive_mul(r, a), p))
    if (is_identity(r)) return t;
  return 0;
}

inline unsigned entry_point_brute(const Integer& m, std::uint64_t p) {
  for (unsigned e = 1;; ++e)
    if (u(m, e) % Integer(static_cast<unsigned long>(p)) == 0) return e;
}

}  // namespace oracle
