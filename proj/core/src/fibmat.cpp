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

#include "netbin/fibmat.hpp"

namespace netbin {

std::string_view to_string(Line line) {
  switch (line) {
    case Line::first_row: return "first-row";
    case Line::first_column: return "first-column";
    case Line::second_row: return "second-row";
    case Line::second_column: return "second-column";
    case Line::last_row: return "last-row";
    case Line::last_column: return "last-column";
  }
  return "unknown";
}

std::vector<Report> verify_corollary_identities(const FibSpec<Integer>& spec, long l_max, long p_max) {
  const long n = spec.n;
  if (n < 2) throw std::invalid_argument("verify_corollary_identities: n must be at least 2");
  const Integer& m = spec.m;
  SequenceGen<Integer> u(SeqKind::U, m);
  auto base = [&](std::string_view id) {
    Report rep(id);
    rep.params = spec_params(spec);
    return rep;
  };
  auto tag = [](std::initializer_list<std::pair<const char*, long>> kv) {
    std::string out;
    for (const auto& [k, v] : kv) {
      if (!out.empty()) out += ",";
      out += std::string(k) + "=" + std::to_string(v);
    }
    return out;
  };

  // Identity 1: first power applied to w, component i.
  Report id1 = base(claims::kFibIdentity1);
  for (long i = 1; i <= n; ++i) {
    Integer sum = 0;
    for (long j = 1; j <= n; ++j) {
      Integer c = binomial(i - 1, n - j) * sign_power(n + 1 - j);
      sum += detail::monomial_term<Integer>(c, {{&m, i + j - n - 1}}, m) * u(n - j);
    }
    const Integer want = u(i - 1);
    id1.check(sum == want, tag({{"i", i}}), to_string(want), to_string(sum));
  }

  // Identity 2: second power applied to w.
  Report id2 = base(claims::kFibIdentity2);
  for (long i = 1; i <= n; ++i) {
    Integer sum = 0;
    for (long j = 1; j <= n; ++j)
      for (long k = 1; k <= n; ++k) {
        Integer c = binomial(i - 1, n - k) * binomial(k - 1, n - j) * sign_power(n + 1 - j);
        sum += detail::monomial_term<Integer>(c, {{&m, i + j + 2 * k - 2 * n - 2}}, m) * u(n - j);
      }
    const Integer want = u(n + i - 2);
    id2.check(sum == want, tag({{"i", i}}), to_string(want), to_string(sum));
  }

  Report id3 = base(claims::kFibIdentity3);
  Report id4 = base(claims::kFibIdentity4);
  Report general = base(claims::kFibGeneralSum);
  for (auto* r : {&id3, &id4, &general})
    r->with("l_max", std::to_string(l_max)).with("p_max", std::to_string(p_max));
  long skipped = 0;

  IntMatrix t_pow = IntMatrix::identity(static_cast<std::size_t>(n), m);
  const IntMatrix t = build_T(spec);
  for (long l = 0; l <= l_max; ++l) {
    if (l > 0) t_pow = mat_mul(t_pow, t);
    const Integer x = u(l - 1);
    const Integer y = u(l);
    const Integer cassini = sign_power(l);
    for (long p = 0; p <= p_max; ++p) {
      const long shift = (n - 1) * p;

      // Identity 3: first row of T^l applied to the consecutive block.
      Integer s3 = 0;
      for (long j = 1; j <= n; ++j)
        s3 += detail::monomial_term<Integer>(binomial(n - 1, j - 1), {{&x, n - j}, {&y, j - 1}}, m) *
              u(shift + j - 1);
      const Integer w3 = u((n - 1) * (l + p));
      id3.check(s3 == w3, tag({{"l", l}, {"p", p}}), to_string(w3), to_string(s3));

      // Identity 4, multiplied through by U_{l-1} U_l.
      if (sgn(x) == 0 || sgn(y) == 0) {
        ++skipped;
      } else {
        Integer s4 = 0;
        for (long j = 1; j <= n; ++j) {
          Integer bracket = y * y * binomial(n - 1, j - 1) + cassini * binomial(n - 2, j - 2);
          s4 += detail::monomial_term<Integer>(Integer(1), {{&x, n - j}, {&y, j - 1}}, m) * bracket *
                u(shift + j - 1);
        }
        const Integer w4 = x * y * u((n - 1) * (l + p) + 1);
        id4.check(s4 == w4, tag({{"l", l}, {"p", p}}), to_string(w4), to_string(s4));
      }

      // General sum over every row i of T^l.
      for (long i = 1; i <= n; ++i) {
        Integer s = 0;
        for (long j = 1; j <= n; ++j)
          s += u(shift + j - 1) * t_pow(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1));
        const Integer want = u((n - 1) * (l + p) + i - 1);
        general.check(s == want, tag({{"i", i}, {"l", l}, {"p", p}}), to_string(want), to_string(s));
      }
    }
  }
  id4.with("skipped", std::to_string(skipped));
  return {std::move(id1), std::move(id2), std::move(id3), std::move(id4), std::move(general)};
}

}  // namespace netbin
