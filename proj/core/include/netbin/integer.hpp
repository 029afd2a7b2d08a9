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

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace netbin {

/// Arbitrary-precision signed integer.
using Integer = mpz_class;

/// Exact rational with normalized sign and lowest terms (GMP canonical form).
using Rational = mpq_class;

/// Thrown when an operation that must divide exactly leaves a remainder.
/// This always indicates a bug upstream, never a rounding situation.
class InexactDivision : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Binomial coefficient C(n, k), defined as 0 unless 0 <= k <= n.
Integer binomial(long n, long k);

/// base^exp with 0^0 = 1.
Integer ipow(const Integer& base, unsigned long exp);

/// (-1)^k as +1 / -1 for any integer k.
inline int sign_power(long k) { return (k % 2 == 0) ? 1 : -1; }

std::string to_string(const Integer& v);

}  // namespace netbin
