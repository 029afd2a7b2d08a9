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
#include <stdexcept>
#include <string>
#include <vector>

#include "netbin/claims.hpp"
#include "netbin/fibmat.hpp"
#include "netbin/matrix.hpp"
#include "netbin/report.hpp"
#include "netbin/ring.hpp"

namespace netbin {

/// Bivariate power series in x, y truncated to degrees deg_x, deg_y.
template <class R>
class BiSeries {
 public:
  BiSeries(std::size_t deg_x, std::size_t deg_y, const R& like)
      : deg_x_(deg_x), deg_y_(deg_y), c_((deg_x + 1) * (deg_y + 1), zero_like(like)) {}

  std::size_t deg_x() const { return deg_x_; }
  std::size_t deg_y() const { return deg_y_; }

  /// Coefficient of x^a y^b.
  R& at(std::size_t a, std::size_t b) { return c_[index(a, b)]; }
  const R& at(std::size_t a, std::size_t b) const { return c_[index(a, b)]; }

  /// Product truncated to this series' window.
  BiSeries operator*(const BiSeries& o) const {
    BiSeries out(deg_x_, deg_y_, c_.front());
    for (std::size_t a = 0; a <= deg_x_; ++a)
      for (std::size_t b = 0; b <= deg_y_; ++b) {
        if (is_zero(at(a, b))) continue;
        for (std::size_t da = 0; a + da <= deg_x_ && da <= o.deg_x_; ++da)
          for (std::size_t db = 0; b + db <= deg_y_ && db <= o.deg_y_; ++db)
            ring_traits<R>::multiply_add(out.at(a + da, b + db), at(a, b), o.at(da, db));
      }
    return out;
  }

  friend bool operator==(const BiSeries&, const BiSeries&) = default;

 private:
  std::size_t index(std::size_t a, std::size_t b) const {
    if (a > deg_x_ || b > deg_y_) throw std::out_of_range("BiSeries: index outside the window");
    return a * (deg_y_ + 1) + b;
  }

  std::size_t deg_x_, deg_y_;
  std::vector<R> c_;
};

/// P(x, y) = sum a(i,j)^(e) x^(i-1) y^(j-1) over the n x n window.
template <class R>
BiSeries<R> series_from_power(const FibSpec<R>& spec, long e) {
  if (e < 1) throw std::invalid_argument("series_from_power: power must be at least 1");
  const auto a = mat_pow(build_T(spec), static_cast<unsigned long>(e));
  const auto n = static_cast<std::size_t>(spec.n);
  BiSeries<R> s(n - 1, n - 1, spec.m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) s.at(i, j) = a(i, j);
  return s;
}

/// D = U_{e-1} + U_e y - x (U_e + U_{e+1} y), on the window of spec.
template <class R>
BiSeries<R> denominator_series(const FibSpec<R>& spec, long e) {
  const auto d = static_cast<std::size_t>(spec.n - 1);
  BiSeries<R> s(d, d, spec.m);
  s.at(0, 0) = seq_u(spec.m, e - 1);
  if (d >= 1) {
    s.at(0, 1) = seq_u(spec.m, e);
    s.at(1, 0) = -seq_u(spec.m, e);
    s.at(1, 1) = -seq_u(spec.m, e + 1);
  }
  return s;
}

/// N = (U_{e-1} + U_e y)^n, on the window of spec.
template <class R>
BiSeries<R> numerator_series(const FibSpec<R>& spec, long e) {
  const auto d = static_cast<std::size_t>(spec.n - 1);
  const R x = seq_u(spec.m, e - 1);
  const R y = seq_u(spec.m, e);
  BiSeries<R> s(d, d, spec.m);
  for (std::size_t b = 0; b <= d; ++b)
    s.at(0, b) = R(from_integer(binomial(spec.n, static_cast<long>(b)), spec.m) *
                   power(x, static_cast<unsigned long>(spec.n) - b) * power(y, b));
  return s;
}

/// Q with Q * den = num on the window, solved coefficient by coefficient with
/// exact division by den's constant term. Throws InexactDivision when Q does
/// not exist over R and std::domain_error when that constant term is zero.
template <class R>
BiSeries<R> series_quotient(const BiSeries<R>& num, const BiSeries<R>& den) {
  const R& c0 = den.at(0, 0);
  if (is_zero(c0)) throw std::domain_error("series_quotient: denominator has zero constant term");
  BiSeries<R> q(num.deg_x(), num.deg_y(), c0);
  for (std::size_t a = 0; a <= num.deg_x(); ++a)
    for (std::size_t b = 0; b <= num.deg_y(); ++b) {
      R rest = num.at(a, b);
      for (std::size_t da = 0; da <= a && da <= den.deg_x(); ++da)
        for (std::size_t db = 0; db <= b && db <= den.deg_y(); ++db) {
          if (da == 0 && db == 0) continue;
          rest = R(rest - den.at(da, db) * q.at(a - da, b - db));
        }
      q.at(a, b) = divide_exact(rest, c0);
    }
  return q;
}

template <class R>
void compare_series(Report& rep, const BiSeries<R>& want, const BiSeries<R>& got) {
  for (std::size_t a = 0; a <= want.deg_x(); ++a)
    for (std::size_t b = 0; b <= want.deg_y(); ++b)
      rep.check_lazy(want.at(a, b) == got.at(a, b), [&] {
        return std::tuple{"x^" + std::to_string(a) + "*y^" + std::to_string(b), ring_to_string(want.at(a, b)),
                          ring_to_string(got.at(a, b))};
      });
}

/// Window identity P D = N for the e-th power.
template <class R>
Report verify_genfunc(const FibSpec<R>& spec, long e) {
  if (spec.n < 2) throw std::invalid_argument("verify_genfunc: n must be at least 2");
  Report rep(claims::kGenfuncWindow);
  rep.params = spec_params(spec);
  rep.with("e", std::to_string(e));
  compare_series(rep, numerator_series(spec, e), series_from_power(spec, e) * denominator_series(spec, e));
  return rep;
}

/// When U_{e-1} != 0 (every e >= 2 for m >= 1): the series quotient N / D
/// reproduces P on the window.
template <class R>
Report verify_genfunc_inversion(const FibSpec<R>& spec, long e) {
  if (spec.n < 2) throw std::invalid_argument("verify_genfunc_inversion: n must be at least 2");
  Report rep(claims::kGenfuncInversion);
  rep.params = spec_params(spec);
  rep.with("e", std::to_string(e));
  const auto den = denominator_series(spec, e);
  if (is_zero(den.at(0, 0))) {
    rep.mark_hypothesis_not_satisfied("U_{e-1} != 0", "U_{e-1}=0");
    return rep;
  }
  compare_series(rep, series_from_power(spec, e), series_quotient(numerator_series(spec, e), den));
  return rep;
}

}  // namespace netbin
