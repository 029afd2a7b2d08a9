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

#include "netbin/claims.hpp"

#include <array>

namespace netbin::claims {

std::span<const std::string_view> manifest() {
  static constexpr std::array kAll = {
      kNettedFamilyParams,  kNettedPower,        kNettedCoeffRecurrence,
      kNettedCoeffRecurrenceAlt, kNettedBoundary, kNettedTableau,
      kFibPowerVector,     kFibUniqueness,
      kFibIdentity1,        kFibIdentity2,       kFibIdentity3,
      kFibIdentity4,        kFibGeneralSum,      kFibClosedForms,
      kFibSecondColumnPrinted, kFibInverse,      kGenfuncWindow,
      kGenfuncInversion,    kModEntryScalar,     kModEntryParity,
      kModFourfold,         kModDoubleEven,      kModDoubleOddPrinted,
      kModDoubleOddDerived, kModUpMinus,         kModUpPlus,
      kModPeriod,           kModRoot,            kModOrder,
      kCharpolyConjecture,
  };
  return kAll;
}

}  // namespace netbin::claims
