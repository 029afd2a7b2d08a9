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

#include "netbin/nullspace.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace netbin {
namespace {

struct Echelon {
  std::vector<std::vector<Integer>> rows;  // only the pivot rows survive
  std::vector<std::size_t> pivot_cols;
};

// One-step Bareiss elimination. Every update divides exactly by the previous
// pivot, so entries stay integral minors of the input and never grow beyond
// them. Columns without a pivot are skipped.
Echelon bareiss(std::vector<std::vector<Integer>> m, std::size_t cols) {
  Echelon out;
  Integer prev = 1;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < m.size(); ++col) {
    std::size_t p = pivot_row;
    while (p < m.size() && sgn(m[p][col]) == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[pivot_row]);
    const auto& piv = m[pivot_row];
    for (std::size_t i = pivot_row + 1; i < m.size(); ++i) {
      auto& row = m[i];
      const Integer lead = row[col];
      for (std::size_t j = col + 1; j < cols; ++j) {
        Integer t = piv[col] * row[j] - lead * piv[j];
        row[j] = ring_traits<Integer>::divide_exact(t, prev);
      }
      row[col] = 0;
    }
    prev = piv[col];
    out.pivot_cols.push_back(col);
    ++pivot_row;
  }
  m.resize(pivot_row);
  out.rows = std::move(m);
  return out;
}

std::vector<std::vector<Integer>> to_rows(const IntMatrix& a) {
  std::vector<std::vector<Integer>> rows(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) rows[r].assign(a.row(r).begin(), a.row(r).end());
  return rows;
}

}  // namespace

std::vector<std::vector<Integer>> nullspace_integer(const IntMatrix& a) {
  const std::size_t cols = a.cols();
  Echelon e = bareiss(to_rows(a), cols);

  std::vector<bool> is_pivot(cols, false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;

  std::vector<std::vector<Integer>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> x(cols, Rational(0));
    x[free] = 1;
    for (std::size_t k = e.pivot_cols.size(); k-- > 0;) {
      const std::size_t pc = e.pivot_cols[k];
      Rational acc = 0;
      for (std::size_t j = pc + 1; j < cols; ++j)
        if (sgn(e.rows[k][j]) != 0 && sgn(x[j]) != 0) acc += Rational(e.rows[k][j]) * x[j];
      x[pc] = -acc / Rational(e.rows[k][pc]);
    }
    Integer lcm_den = 1;
    for (const auto& v : x) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), v.get_den_mpz_t());
    std::vector<Integer> v(cols);
    Integer content = 0;
    for (std::size_t j = 0; j < cols; ++j) {
      Rational scaled = x[j] * Rational(lcm_den);
      v[j] = scaled.get_num();
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v[j].get_mpz_t());
    }
    if (sgn(content) != 0 && content != 1)
      for (auto& entry : v) entry = ring_traits<Integer>::divide_exact(entry, content);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<std::vector<Rational>> nullspace_rational(const RatMatrix& a) {
  std::vector<Integer> cleared;
  cleared.reserve(a.rows() * a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Integer lcm_den = 1;
    for (const auto& v : a.row(r)) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), v.get_den_mpz_t());
    for (const auto& v : a.row(r)) {
      Rational scaled = v * Rational(lcm_den);
      cleared.push_back(scaled.get_num());
    }
  }
  auto basis = nullspace_integer(IntMatrix(a.rows(), a.cols(), std::move(cleared)));
  std::vector<std::vector<Rational>> out;
  out.reserve(basis.size());
  for (const auto& v : basis) out.emplace_back(v.begin(), v.end());
  return out;
}

std::size_t rank(const IntMatrix& a) { return bareiss(to_rows(a), a.cols()).pivot_cols.size(); }

}  // namespace netbin
