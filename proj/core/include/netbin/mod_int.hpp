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
#include <stdexcept>
#include <string>

#include "netbin/integer.hpp"

namespace netbin {

/// Residue modulo a runtime modulus p (1 < p < 2^63). The modulus travels
/// with the value so generic code can build zeros and ones from any element.
class ModInt {
 public:
  ModInt() = default;
  ModInt(std::uint64_t value, std::uint64_t modulus)
      : value_(modulus == 0 ? 0 : value % modulus), modulus_(modulus) {}
  /// Reduces an arbitrary signed integer into [0, p).
  ModInt(const Integer& value, std::uint64_t modulus);

  std::uint64_t value() const { return value_; }
  std::uint64_t modulus() const { return modulus_; }
  bool is_zero() const { return value_ == 0; }

  ModInt operator+(const ModInt& o) const;
  ModInt operator-(const ModInt& o) const;
  ModInt operator*(const ModInt& o) const;
  ModInt operator-() const;
  ModInt& operator+=(const ModInt& o) { return *this = *this + o; }
  ModInt& operator-=(const ModInt& o) { return *this = *this - o; }
  ModInt& operator*=(const ModInt& o) { return *this = *this * o; }

  ModInt pow(std::uint64_t e) const;
  /// Multiplicative inverse; throws std::domain_error for a zero residue.
  /// Uses Fermat, so the modulus must be prime.
  ModInt inverse() const;

  friend bool operator==(const ModInt& a, const ModInt& b) {
    return a.value_ == b.value_ && a.modulus_ == b.modulus_;
  }

 private:
  std::uint64_t value_ = 0;
  std::uint64_t modulus_ = 0;
};

std::string to_string(const ModInt& v);

}  // namespace netbin
