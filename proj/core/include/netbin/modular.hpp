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

#include <cstdint>
#include <optional>
#include <vector>

#include "netbin/integer.hpp"
#include "netbin/matrix.hpp"
#include "netbin/mod_int.hpp"
#include "netbin/report.hpp"

namespace netbin {

/// Trial division.
bool is_prime(std::uint64_t p);

/// Least e >= 1 with U_e(m) = 0 mod p. Throws std::invalid_argument unless p
/// is prime.
std::uint64_t entry_point(const Integer& m, std::uint64_t p);

/// Data shared by the congruence checks for one (m, p).
struct ModularContext {
  Integer m;
  std::uint64_t p = 0;
  std::uint64_t entry = 0;
  /// U_{(e+1)/2} / U_{(e-1)/2} mod p, present when the entry point is odd and p is odd.
  std::optional<ModInt> r;
  /// m^2 + 4.
  Integer discriminant;

  bool p_divides_discriminant() const;
};

ModularContext make_context(const Integer& m, std::uint64_t p);

/// A^e with every product reduced mod p.
ModMatrix mat_pow_mod(const IntMatrix& a, std::uint64_t e, std::uint64_t p);

/// c when a = c I, otherwise nullopt.
std::optional<ModInt> scalar_value(const ModMatrix& a);

/// Congruences at the entry point e, one report each: T^e = U_{e-1}^(n-1) I;
/// the parity-of-n forms (-1)^((k+1)e) U_{e-1} I (n = 2k) and (-1)^(ke) I
/// (n = 2k+1); T^(4e) = I; T^(2e) = I for even e; for odd e the quoted
/// refinement T^(2e) = r^(n-1) I (e = 3 mod 4), (-r)^(n-1) I (e = 1 mod 4),
/// which is reported as a documented discrepancy when it fails, next to the
/// form T^(2e) = (-1)^(e(n-1)) I together with r^2 = -1.
std::vector<Report> verify_entry_point_theorem(long n, const Integer& m, std::uint64_t p);

/// p | U_{p-1} implies T^(p-1) = I; p | U_{p+1} implies T^(p+1) = I for odd n
/// and -I for even n. A hypothesis that does not hold is reported as such.
std::vector<Report> verify_up_theorems(long n, const Integer& m, std::uint64_t p);

/// When x^2 - m x - 1 has a root mod p and p does not divide m^2 + 4: the
/// pair sequence (U_e, U_{e+1}) mod p has period dividing p - 1 (and divisible
/// by the entry point), and T^(p-1) = I.
std::vector<Report> verify_root_theorem(long n, const Integer& m, std::uint64_t p);

/// Multiplicative order of T_n(m) mod p, refined downward from 4 * entry_point.
std::uint64_t order_mod_p(long n, const Integer& m, std::uint64_t p);

/// T^order = I, order | 4e, and T^(order/q) != I for each prime q | order.
Report verify_order(long n, const Integer& m, std::uint64_t p);

}  // namespace netbin
