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

#include <concepts>
#include <string>

#include "netbin/integer.hpp"
#include "netbin/mod_int.hpp"

namespace netbin {

/// Per-type glue that lets the matrix, polynomial and sequence templates run
/// over Integer, ModInt and Poly<Integer> (the ring Z[m]) alike. Every
/// constructor takes a "like" element so that residues inherit a modulus.
template <class R>
struct ring_traits;

template <>
struct ring_traits<Integer> {
  static Integer zero(const Integer&) { return Integer(0); }
  static Integer one(const Integer&) { return Integer(1); }
  static Integer from_integer(const Integer& v, const Integer&) { return v; }
  static bool is_zero(const Integer& a) { return sgn(a) == 0; }
  static void multiply_add(Integer& acc, const Integer& a, const Integer& b) {
    mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  }
  static Integer divide_exact(const Integer& a, const Integer& b);
  static std::string to_string(const Integer& a) { return netbin::to_string(a); }
};

template <>
struct ring_traits<ModInt> {
  static ModInt zero(const ModInt& like) { return ModInt(0, like.modulus()); }
  static ModInt one(const ModInt& like) { return ModInt(1, like.modulus()); }
  static ModInt from_integer(const Integer& v, const ModInt& like) {
    return ModInt(v, like.modulus());
  }
  static bool is_zero(const ModInt& a) { return a.is_zero(); }
  static void multiply_add(ModInt& acc, const ModInt& a, const ModInt& b) { acc += a * b; }
  static ModInt divide_exact(const ModInt& a, const ModInt& b);
  static std::string to_string(const ModInt& a) { return netbin::to_string(a); }
};

template <>
struct ring_traits<Rational> {
  static Rational zero(const Rational&) { return Rational(0); }
  static Rational one(const Rational&) { return Rational(1); }
  static Rational from_integer(const Integer& v, const Rational&) { return Rational(v); }
  static bool is_zero(const Rational& a) { return sgn(a) == 0; }
  static void multiply_add(Rational& acc, const Rational& a, const Rational& b) { acc += a * b; }
  static Rational divide_exact(const Rational& a, const Rational& b);
  static std::string to_string(const Rational& a) { return a.get_str(); }
};

template <class R>
concept Ring = std::copyable<R> && std::equality_comparable<R> &&
               requires(const R& a, const R& b, R& acc, const Integer& z) {
                 { a + b } -> std::convertible_to<R>;
                 { a - b } -> std::convertible_to<R>;
                 { a * b } -> std::convertible_to<R>;
                 { -a } -> std::convertible_to<R>;
                 { ring_traits<R>::zero(a) } -> std::same_as<R>;
                 { ring_traits<R>::one(a) } -> std::same_as<R>;
                 { ring_traits<R>::from_integer(z, a) } -> std::same_as<R>;
                 { ring_traits<R>::is_zero(a) } -> std::same_as<bool>;
                 ring_traits<R>::multiply_add(acc, a, b);
                 { ring_traits<R>::divide_exact(a, b) } -> std::same_as<R>;
                 { ring_traits<R>::to_string(a) } -> std::same_as<std::string>;
               };

template <class R>
R zero_like(const R& like) { return ring_traits<R>::zero(like); }

template <class R>
R one_like(const R& like) { return ring_traits<R>::one(like); }

template <class R>
bool is_zero(const R& a) { return ring_traits<R>::is_zero(a); }

template <class R>
R from_integer(const Integer& v, const R& like) { return ring_traits<R>::from_integer(v, like); }

template <class R>
R divide_exact(const R& a, const R& b) { return ring_traits<R>::divide_exact(a, b); }

template <class R>
std::string ring_to_string(const R& a) { return ring_traits<R>::to_string(a); }

/// base^exp by squaring, 0^0 = 1.
template <class R>
R power(const R& base, unsigned long exp) {
  R result = one_like(base);
  R b = base;
  while (exp != 0) {
    if (exp & 1UL) result = R(result * b);
    exp >>= 1;
    if (exp != 0) b = R(b * b);
  }
  return result;
}

}  // namespace netbin
