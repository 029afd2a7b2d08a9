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

#include <vector>

#include "netbin/matrix.hpp"
#include "netbin/poly.hpp"

namespace netbin {

/// Characteristic polynomial det(A - x I) of a square matrix over Z or Z[m].
///
/// Faddeev-LeVerrier: with M_1 = I and c_n = 1,
///   c_{n-k} = -tr(A M_k) / k,   M_{k+1} = A M_k + c_{n-k} I,
/// gives det(x I - A) = sum c_k x^k. Every division by k is exact in the
/// coefficient ring; a remainder raises InexactDivision. The result is
/// multiplied by (-1)^n so that the constant term equals det A.
template <class R>
Poly<R> charpoly_exact(const Matrix<R>& a) {
  if (!a.is_square()) throw ShapeError("charpoly_exact: matrix is not square");
  const std::size_t n = a.rows();
  const R& like = a(0, 0);
  std::vector<R> c(n + 1, zero_like(like));
  c[n] = one_like(like);

  auto trace_of_product = [&](const Matrix<R>& left, const Matrix<R>& right) {
    R tr = zero_like(like);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t s = 0; s < n; ++s)
        if (!is_zero(left(i, s))) ring_traits<R>::multiply_add(tr, left(i, s), right(s, i));
    return tr;
  };

  Matrix<R> m = Matrix<R>::identity(n, like);
  for (std::size_t k = 1; k <= n; ++k) {
    const R divisor = from_integer(Integer(static_cast<unsigned long>(k)), like);
    if (k < n) {
      Matrix<R> am = mat_mul(a, m);
      R tr = zero_like(like);
      for (std::size_t i = 0; i < n; ++i) tr = R(tr + am(i, i));
      c[n - k] = R(-divide_exact(tr, divisor));
      for (std::size_t i = 0; i < n; ++i) am(i, i) = R(am(i, i) + c[n - k]);
      m = std::move(am);
    } else {
      c[0] = R(-divide_exact(trace_of_product(a, m), divisor));
    }
  }
  if (n % 2 == 1)
    for (auto& coef : c) coef = R(-coef);
  return Poly<R>(std::move(c));
}

}  // namespace netbin
