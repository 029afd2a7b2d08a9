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

#include <span>
#include <string_view>

namespace netbin::claims {

// Netted matrices.
inline constexpr std::string_view kNettedFamilyParams = "netted.family-params";
inline constexpr std::string_view kNettedPower = "netted.power";
inline constexpr std::string_view kNettedCoeffRecurrence = "netted.coeff-recurrence";
inline constexpr std::string_view kNettedCoeffRecurrenceAlt = "netted.coeff-recurrence-alt";
inline constexpr std::string_view kNettedBoundary = "netted.boundary";
inline constexpr std::string_view kNettedTableau = "netted.tableau";

// Generalized Fibonacci matrices.
inline constexpr std::string_view kFibPowerVector = "fib.power-vector";
inline constexpr std::string_view kFibUniqueness = "fib.uniqueness";
inline constexpr std::string_view kFibIdentity1 = "fib.identity.1";
inline constexpr std::string_view kFibIdentity2 = "fib.identity.2";
inline constexpr std::string_view kFibIdentity3 = "fib.identity.3";
inline constexpr std::string_view kFibIdentity4 = "fib.identity.4";
inline constexpr std::string_view kFibGeneralSum = "fib.general-sum";
inline constexpr std::string_view kFibClosedForms = "fib.closed-forms";
inline constexpr std::string_view kFibSecondColumnPrinted = "fib.second-column-printed";
inline constexpr std::string_view kFibInverse = "fib.inverse";

// Generating function.
inline constexpr std::string_view kGenfuncWindow = "genfunc.window";
inline constexpr std::string_view kGenfuncInversion = "genfunc.inversion";

// Powers modulo a prime.
inline constexpr std::string_view kModEntryScalar = "mod.entry-scalar";
inline constexpr std::string_view kModEntryParity = "mod.entry-parity";
inline constexpr std::string_view kModFourfold = "mod.fourfold";
inline constexpr std::string_view kModDoubleEven = "mod.double-even";
inline constexpr std::string_view kModDoubleOddPrinted = "mod.double-odd-printed";
inline constexpr std::string_view kModDoubleOddDerived = "mod.double-odd-derived";
inline constexpr std::string_view kModUpMinus = "mod.up-minus";
inline constexpr std::string_view kModUpPlus = "mod.up-plus";
inline constexpr std::string_view kModPeriod = "mod.period";
inline constexpr std::string_view kModRoot = "mod.root";
inline constexpr std::string_view kModOrder = "mod.order";

// Characteristic polynomial.
inline constexpr std::string_view kCharpolyConjecture = "charpoly.conjecture";

/// Every claim id the verifiers can emit, in manifest order.
std::span<const std::string_view> manifest();

}  // namespace netbin::claims
