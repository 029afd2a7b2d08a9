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

#include <algorithm>
#include <string>
#include <type_traits>
#include <vector>

#include "netbin/charpoly.hpp"
#include "netbin/claims.hpp"
#include "netbin/fibmat.hpp"
#include "netbin/poly.hpp"
#include "netbin/report.hpp"
#include "netbin/sequences.hpp"

namespace netbin {

/// Conjectured det(T_n(m) - x I), built from Lucas numbers V_e(m) by the
/// residue of n mod 4:
///   p_0 = 1, p_1 = 1 - x, p_2 = -1 - V_1 x + x^2, p_3 = -(1 + x)(1 - V_2 x + x^2),
///   p_{4k+1} = (1 + V_{4k-2} x + x^2)(1 - V_{4k} x + x^2)   p_{4k-3}
///   p_{4k+3} = (1 + V_{4k} x + x^2)(1 - V_{4k+2} x + x^2)   p_{4k-1}
///   p_{4k+2} = (-1 + V_{4k-1} x + x^2)(-1 - V_{4k+1} x + x^2) p_{4k-2}
///   p_{4k+4} = (-1 + V_{4k+1} x + x^2)(-1 - V_{4k+3} x + x^2) p_{4k}
template <class R>
Poly<R> conjectured_charpoly(long n, const R& m) {
  if (n < 0) throw std::invalid_argument("conjectured_charpoly: negative dimension");
  const R one = one_like(m);
  auto v = [&](long e) { return seq_v(m, e); };
  // c0 + c1 x + x^2
  auto quad = [&](const R& c0, const R& c1) { return Poly<R>({c0, c1, one}); };
  switch (n) {
    case 0: return Poly<R>(one);
    case 1: return Poly<R>({one, R(-one)});
    case 2: return quad(R(-one), R(-v(1)));
    case 3: return Poly<R>({R(-one), R(-one)}) * quad(one, R(-v(2)));
    default: break;
  }
  const long k = (n - 1) / 4;
  switch (n % 4) {
    case 1: return quad(one, v(4 * k - 2)) * quad(one, R(-v(4 * k))) * conjectured_charpoly(4 * k - 3, m);
    case 3: return quad(one, v(4 * k)) * quad(one, R(-v(4 * k + 2))) * conjectured_charpoly(4 * k - 1, m);
    case 2: return quad(R(-one), v(4 * k - 1)) * quad(R(-one), R(-v(4 * k + 1))) * conjectured_charpoly(4 * k - 2, m);
    default: {
      const long j = (n - 4) / 4;
      return quad(R(-one), v(4 * j + 1)) * quad(R(-one), R(-v(4 * j + 3))) * conjectured_charpoly(4 * j, m);
    }
  }
}

/// One coefficient where the computed and conjectured polynomials differ.
template <class R>
struct CoefficientMismatch {
  long degree;
  R computed;
  R conjectured;
};

template <class R>
struct ConjectureReport {
  long n = 0;
  bool symbolic = false;
  std::string m_text;
  Poly<R> computed;
  Poly<R> conjectured;
  std::vector<CoefficientMismatch<R>> mismatches;

  bool equal() const { return mismatches.empty(); }
  Report to_report() const;
};

/// Compares charpoly_exact(T_n(m)) with conjectured_charpoly(n, m). Pass the
/// indeterminate ZPoly::variable() for the symbolic comparison.
template <class R>
ConjectureReport<R> verify_conjecture(const FibSpec<R>& spec) {
  ConjectureReport<R> out;
  out.n = spec.n;
  out.symbolic = !std::is_same_v<R, Integer>;
  out.m_text = out.symbolic ? "symbolic" : ring_to_string(spec.m);
  out.computed = charpoly_exact(build_T(spec));
  out.conjectured = conjectured_charpoly(spec.n, spec.m);
  const long top = std::max(out.computed.degree(), out.conjectured.degree());
  for (long d = 0; d <= top; ++d) {
    R a = out.computed.coeff(static_cast<std::size_t>(d));
    R b = out.conjectured.coeff(static_cast<std::size_t>(d));
    if (!(a == b)) out.mismatches.push_back({d, std::move(a), std::move(b)});
  }
  return out;
}

template <class R>
Report ConjectureReport<R>::to_report() const {
  Report rep(claims::kCharpolyConjecture);
  rep.with("n", std::to_string(n));
  rep.with("m", m_text);
  rep.checks = static_cast<std::size_t>(std::max(computed.degree(), conjectured.degree()) + 1);
  for (const auto& mm : mismatches)
    rep.fail("x^" + std::to_string(mm.degree), ring_to_string(mm.conjectured), ring_to_string(mm.computed));
  if (equal()) rep.with("polynomial", format_poly(computed, "x"));
  return rep;
}

}  // namespace netbin
