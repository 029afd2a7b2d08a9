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
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "netbin/ring.hpp"

namespace netbin {

/// Dense univariate polynomial, coefficients lowest degree first. The
/// coefficient list is kept trimmed, so the zero polynomial is empty and the
/// last stored coefficient is never zero.
template <class R>
class Poly {
 public:
  using coefficient_type = R;

  Poly() = default;
  explicit Poly(std::vector<R> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  /// Constant polynomial.
  explicit Poly(const R& c) : coeffs_{c} { trim(); }
  Poly(std::initializer_list<R> coeffs) : coeffs_(coeffs) { trim(); }

  static Poly monomial(const R& c, std::size_t degree) {
    std::vector<R> v(degree + 1, zero_like(c));
    v[degree] = c;
    return Poly(std::move(v));
  }
  /// The indeterminate itself, 0 + 1*t.
  static Poly variable() { return Poly({R(0), R(1)}); }

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  std::size_t size() const { return coeffs_.size(); }
  const std::vector<R>& coeffs() const { return coeffs_; }

  /// Coefficient of t^k; zero past the degree.
  R coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : R(0); }
  const R& leading() const { return coeffs_.back(); }

  /// Number of nonzero coefficients.
  std::size_t term_count() const {
    return static_cast<std::size_t>(std::count_if(coeffs_.begin(), coeffs_.end(),
                                                  [](const R& c) { return !netbin::is_zero(c); }));
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& c : r.coeffs_) c = R(-c);
    return r;
  }

  Poly& operator+=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), zero_like(o.coeffs_[0]));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] = R(coeffs_[k] + o.coeffs_[k]);
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), zero_like(o.coeffs_[0]));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] = R(coeffs_[k] - o.coeffs_[k]);
    trim();
    return *this;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<R> out(a.coeffs_.size() + b.coeffs_.size() - 1, zero_like(a.coeffs_[0]));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (netbin::is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        ring_traits<R>::multiply_add(out[i + j], a.coeffs_[i], b.coeffs_[j]);
    }
    return Poly(std::move(out));
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  Poly scaled(const R& s) const {
    Poly r = *this;
    for (auto& c : r.coeffs_) c = R(c * s);
    r.trim();
    return r;
  }

  /// Divides every coefficient by s; throws InexactDivision on a remainder.
  Poly divide_exact_scalar(const R& s) const {
    Poly r = *this;
    for (auto& c : r.coeffs_) c = netbin::divide_exact(c, s);
    return r;
  }

  /// Exact polynomial quotient; throws InexactDivision if d does not divide *this.
  Poly divide_exact(const Poly& d) const {
    if (d.is_zero()) throw InexactDivision("polynomial division by zero");
    if (is_zero()) return Poly();
    if (degree() < d.degree()) throw InexactDivision("polynomial quotient is not exact");
    Poly rem = *this;
    std::vector<R> q(static_cast<std::size_t>(degree() - d.degree() + 1), zero_like(leading()));
    while (!rem.is_zero() && rem.degree() >= d.degree()) {
      const auto shift = static_cast<std::size_t>(rem.degree() - d.degree());
      R factor = netbin::divide_exact(rem.leading(), d.leading());
      q[shift] = factor;
      rem -= monomial(factor, shift) * d;
    }
    if (!rem.is_zero()) throw InexactDivision("polynomial quotient is not exact");
    return Poly(std::move(q));
  }

  /// Horner evaluation of an integer polynomial at a point of any ring.
  template <class S>
  S evaluate(const S& at) const
    requires std::same_as<R, Integer>
  {
    S acc = zero_like(at);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
      acc = S(acc * at + from_integer(*it, at));
    return acc;
  }

  /// Horner evaluation with coefficients and point in the same ring.
  R evaluate_same(const R& at) const {
    R acc = zero_like(at);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = R(acc * at + *it);
    return acc;
  }

  /// Applies f to every coefficient.
  template <class F>
  auto map(F f) const -> Poly<decltype(f(std::declval<const R&>()))> {
    using S = decltype(f(std::declval<const R&>()));
    std::vector<S> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(f(c));
    return Poly<S>(std::move(out));
  }

 private:
  void trim() {
    while (!coeffs_.empty() && netbin::is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<R> coeffs_;
};

/// Integer polynomials in the parameter m; the ring Z[m].
using ZPoly = Poly<Integer>;

template <class R>
struct ring_traits<Poly<R>> {
  static Poly<R> zero(const Poly<R>&) { return Poly<R>(); }
  static Poly<R> one(const Poly<R>& like) {
    return Poly<R>(one_like(like.is_zero() ? R(0) : like.coeffs()[0]));
  }
  static Poly<R> from_integer(const Integer& v, const Poly<R>& like) {
    return Poly<R>(netbin::from_integer(v, like.is_zero() ? R(0) : like.coeffs()[0]));
  }
  static bool is_zero(const Poly<R>& a) { return a.is_zero(); }
  static void multiply_add(Poly<R>& acc, const Poly<R>& a, const Poly<R>& b) {
    if (a.is_zero() || b.is_zero()) return;
    acc += a * b;
  }
  static Poly<R> divide_exact(const Poly<R>& a, const Poly<R>& b) {
    if (b.degree() == 0) return a.divide_exact_scalar(b.coeffs()[0]);
    return a.divide_exact(b);
  }
  static std::string to_string(const Poly<R>& a);
};

namespace detail {

struct TermText {
  int sign = 1;           // sign to print in front of the term
  std::string magnitude;  // "1" means the coefficient is a unit
};

inline TermText term_text(const Integer& c) {
  Integer a = abs(c);
  return {sgn(c) < 0 ? -1 : 1, netbin::to_string(a)};
}

std::string join_terms(const std::vector<std::pair<TermText, std::string>>& terms);

template <class R>
std::string format_poly_impl(const Poly<R>& p, std::string_view var, std::string_view inner_var);

template <class R>
TermText term_text(const Poly<R>& c, std::string_view inner_var) {
  if (c.term_count() == 1) {
    std::size_t k = 0;
    while (is_zero(c.coeffs()[k])) ++k;
    TermText t = term_text(c.coeffs()[k]);
    if (k == 0) return t;
    std::string power = std::string(inner_var) + (k == 1 ? "" : "^" + std::to_string(k));
    t.magnitude = t.magnitude == "1" ? power : t.magnitude + "*" + power;
    return t;
  }
  return {1, "(" + format_poly_impl(c, inner_var, "") + ")"};
}

template <class R>
std::string format_poly_impl(const Poly<R>& p, std::string_view var, std::string_view inner_var) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<TermText, std::string>> terms;
  for (long k = p.degree(); k >= 0; --k) {
    const R& c = p.coeffs()[static_cast<std::size_t>(k)];
    if (is_zero(c)) continue;
    TermText t;
    if constexpr (std::same_as<R, Integer>) {
      t = term_text(c);
    } else {
      t = term_text(c, inner_var);
    }
    std::string power;
    if (k == 1) power = std::string(var);
    if (k > 1) power = std::string(var) + "^" + std::to_string(k);
    terms.emplace_back(t, power);
  }
  return join_terms(terms);
}

}  // namespace detail

/// Human-readable form, highest degree first, e.g. "x^2 - m*x - 1".
/// inner_var names the indeterminate of polynomial coefficients.
template <class R>
std::string format_poly(const Poly<R>& p, std::string_view var, std::string_view inner_var = "m") {
  return detail::format_poly_impl(p, var, inner_var);
}

template <class R>
std::string ring_traits<Poly<R>>::to_string(const Poly<R>& a) {
  if constexpr (std::same_as<R, Integer>) {
    return format_poly(a, "m");
  } else {
    return format_poly(a, "x", "m");
  }
}

}  // namespace netbin
