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

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "netbin/integer.hpp"
#include "netbin/matrix.hpp"
#include "netbin/mod_int.hpp"
#include "netbin/poly.hpp"
#include "netbin/ring.hpp"

namespace netbin {

__extension__ typedef unsigned __int128 u128;

Integer binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return Integer(0);
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer ipow(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

std::string to_string(const Integer& v) { return v.get_str(10); }

ModInt::ModInt(const Integer& value, std::uint64_t modulus) : modulus_(modulus) {
  if (modulus == 0) throw std::domain_error("ModInt: zero modulus");
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), value.get_mpz_t(), modulus);
  value_ = r.get_ui();
}

ModInt ModInt::operator+(const ModInt& o) const {
  std::uint64_t s = value_ + o.value_;
  if (s >= modulus_ || s < value_) s -= modulus_;
  return ModInt(s, modulus_);
}

ModInt ModInt::operator-(const ModInt& o) const {
  return ModInt(value_ >= o.value_ ? value_ - o.value_ : value_ + (modulus_ - o.value_), modulus_);
}

ModInt ModInt::operator*(const ModInt& o) const {
  return ModInt(static_cast<std::uint64_t>(static_cast<u128>(value_) * o.value_ % modulus_), modulus_);
}

ModInt ModInt::operator-() const { return ModInt(value_ == 0 ? 0 : modulus_ - value_, modulus_); }

ModInt ModInt::pow(std::uint64_t e) const { return power(*this, e); }

ModInt ModInt::inverse() const {
  if (value_ == 0) throw std::domain_error("ModInt: zero has no inverse");
  return pow(modulus_ - 2);
}

std::string to_string(const ModInt& v) { return std::to_string(v.value()); }

Integer ring_traits<Integer>::divide_exact(const Integer& a, const Integer& b) {
  if (sgn(b) == 0) throw InexactDivision("integer division by zero");
  if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
    throw InexactDivision(a.get_str() + " is not divisible by " + b.get_str());
  Integer q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

ModInt ring_traits<ModInt>::divide_exact(const ModInt& a, const ModInt& b) {
  if (b.is_zero()) throw InexactDivision("residue division by zero");
  return a * b.inverse();
}

Rational ring_traits<Rational>::divide_exact(const Rational& a, const Rational& b) {
  if (sgn(b) == 0) throw InexactDivision("rational division by zero");
  return a / b;
}

ModMatrix reduce_mod(const IntMatrix& a, std::uint64_t p) {
  return a.map([p](const Integer& v) { return ModInt(v, p); });
}

namespace detail {

std::string join_terms(const std::vector<std::pair<TermText, std::string>>& terms) {
  std::string out;
  bool first = true;
  for (const auto& [t, power] : terms) {
    std::string body;
    if (power.empty()) {
      body = t.magnitude;
    } else if (t.magnitude == "1") {
      body = power;
    } else {
      body = t.magnitude + "*" + power;
    }
    if (first) {
      out += (t.sign < 0 ? "-" : "") + body;
      first = false;
    } else {
      out += (t.sign < 0 ? " - " : " + ") + body;
    }
  }
  return out;
}

}  // namespace detail
}  // namespace netbin
