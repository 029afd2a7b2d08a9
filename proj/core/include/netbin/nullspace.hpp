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

#include <vector>

#include "netbin/matrix.hpp"

namespace netbin {

/// Basis of the right kernel {v : A v = 0} of an integer matrix, computed by
/// fraction-free (Bareiss) elimination. Each basis vector is primitive
/// (content 1) with a positive entry in its free coordinate. Empty when A has
/// full column rank.
std::vector<std::vector<Integer>> nullspace_integer(const IntMatrix& a);

/// Same basis for a rational matrix. Rows are cleared of denominators before
/// elimination, so the arithmetic stays in Z; the returned vectors are
/// integral.
std::vector<std::vector<Rational>> nullspace_rational(const RatMatrix& a);

/// Rank via the same elimination.
std::size_t rank(const IntMatrix& a);

}  // namespace netbin
