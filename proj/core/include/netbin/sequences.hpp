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
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "netbin/integer.hpp"
#include "netbin/mod_int.hpp"
#include "netbin/poly.hpp"
#include "netbin/ring.hpp"

namespace netbin {

/// Raised for indices outside a sequence's supported range.
class UnsupportedIndex : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

enum class SeqKind {
  U,  ///< U_0 = 0, U_1 = 1, U_{e+1} = m U_e + U_{e-1}
  V,  ///< V_0 = 2, V_1 = m, same recurrence
};

/// U_e(m) for e >= -1, with U_{-1} = 1 (forced by U_1 = m U_0 + U_{-1}).
/// m = 1 gives Fibonacci numbers, m = 2 Pell numbers, an indeterminate m
/// the Fibonacci polynomials.
template <class R>
R seq_u(const R& m, long e) {
  if (e < -1) throw UnsupportedIndex("seq_u: index below -1");
  if (e == -1) return one_like(m);
  R prev = one_like(m);  // U_{-1}
  R cur = zero_like(m);  // U_0
  for (long k = 0; k < e; ++k) {
    R next = R(m * cur + prev);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// V_e(m) for e >= 0.
template <class R>
R seq_v(const R& m, long e) {
  if (e < 0) throw UnsupportedIndex("seq_v: negative index");
  R prev = from_integer(Integer(2), m);
  R cur = m;
  for (long k = 0; k < e; ++k) {
    R next = R(m * cur + prev);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return prev;
}

/// Memoized U or V sequence for one parameter value. Values are computed on
/// demand and cached; concurrent readers are serialized on an internal mutex
/// and always observe identical values.
template <class R>
class SequenceGen {
 public:
  SequenceGen(SeqKind kind, R m) : kind_(kind), m_(std::move(m)) {
    if (kind_ == SeqKind::U) {
      values_ = {zero_like(m_), one_like(m_)};
    } else {
      values_ = {from_integer(Integer(2), m_), m_};
    }
  }

  SeqKind kind() const { return kind_; }
  const R& parameter() const { return m_; }

  /// Term at index e; e = -1 is allowed for U only.
  R at(long e) const {
    if (e == -1 && kind_ == SeqKind::U) return one_like(m_);
    if (e < 0) throw UnsupportedIndex("SequenceGen: negative index");
    std::lock_guard lock(mutex_);
    while (values_.size() <= static_cast<std::size_t>(e)) {
      const auto n = values_.size();
      values_.push_back(R(m_ * values_[n - 1] + values_[n - 2]));
    }
    return values_[static_cast<std::size_t>(e)];
  }

  R operator()(long e) const { return at(e); }

 private:
  SeqKind kind_;
  R m_;
  mutable std::mutex mutex_;
  mutable std::vector<R> values_;
};

inline Integer fibonacci(long e) { return seq_u(Integer(1), e); }
inline Integer pell(long e) { return seq_u(Integer(2), e); }
inline Integer lucas(long e) { return seq_v(Integer(1), e); }

/// Least t >= 1 with (U_t, U_{t+1}) = (0, 1) mod p. The step map
/// (a, b) -> (b, m b + a) has determinant -1, so it is a permutation of
/// pairs and the orbit of (0, 1) is a pure cycle.
std::uint64_t pair_period(const Integer& m, std::uint64_t p);

}  // namespace netbin
