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

#include <thread>

#include <gtest/gtest.h>

#include "netbin/mod_int.hpp"
#include "netbin/poly.hpp"
#include "netbin/sequences.hpp"
#include "oracles.hpp"

namespace netbin {
namespace {

TEST(SequencesTest, Examples) {
  EXPECT_EQ(seq_u(Integer(2), 5), 29);
  EXPECT_EQ(seq_u(Integer(1), 10), 55);
  EXPECT_EQ(seq_u(ZPoly::variable(), 3), ZPoly({Integer(1), Integer(0), Integer(1)}));
  EXPECT_EQ(seq_v(ZPoly::variable(), 2), ZPoly({Integer(2), Integer(0), Integer(1)}));
  EXPECT_EQ(seq_v(Integer(1), 4), 7);
  EXPECT_EQ(seq_v(Integer(2), 3), 14);
}

TEST(SequencesTest, IndexBounds) {
  EXPECT_EQ(seq_u(Integer(7), -1), 1);
  EXPECT_THROW(seq_u(Integer(1), -2), UnsupportedIndex);
  EXPECT_THROW(seq_v(Integer(1), -1), UnsupportedIndex);
  EXPECT_THROW(SequenceGen<Integer>(SeqKind::U, Integer(1)).at(-2), UnsupportedIndex);
}

TEST(SequencesTest, NamedSpecializations) {
  const long fib[] = {0, 1, 1, 2, 3, 5, 8, 13, 21, 34};
  const long pel[] = {0, 1, 2, 5, 12, 29, 70, 169, 408, 985};
  const long luc[] = {2, 1, 3, 4, 7, 11, 18, 29, 47, 76};
  for (long e = 0; e < 10; ++e) {
    EXPECT_EQ(fibonacci(e), fib[e]);
    EXPECT_EQ(pell(e), pel[e]);
    EXPECT_EQ(lucas(e), luc[e]);
    EXPECT_EQ(pell(e), seq_u(Integer(2), e));
  }
}

TEST(SequencesTest, MatchesCompanionMatrixOracle) {
  for (long m = -3; m <= 5; ++m)
    for (unsigned e = 0; e <= 40; ++e) EXPECT_EQ(seq_u(Integer(m), e), oracle::u(Integer(m), e));
}

TEST(SequencesTest, CassiniAndLucasRelation) {
  for (long m = -3; m <= 5; ++m) {
    SequenceGen<Integer> u(SeqKind::U, Integer(m));
    SequenceGen<Integer> v(SeqKind::V, Integer(m));
    for (long e = 0; e <= 200; ++e) {
      EXPECT_EQ(u(e - 1) * u(e + 1) - u(e) * u(e), sign_power(e)) << "m=" << m << " e=" << e;
      EXPECT_EQ(v(e), u(e + 1) + u(e - 1)) << "m=" << m << " e=" << e;
    }
  }
}

TEST(SequencesTest, SymbolicCassini) {
  SequenceGen<ZPoly> u(SeqKind::U, ZPoly::variable());
  for (long e = 0; e <= 40; ++e)
    EXPECT_EQ(u(e - 1) * u(e + 1) - u(e) * u(e), ZPoly(Integer(sign_power(e)))) << "e=" << e;
}

TEST(SequencesTest, ModularGeneratorMatchesReduction) {
  for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u, 13u})
    for (long m = -3; m <= 5; ++m) {
      SequenceGen<ModInt> um(SeqKind::U, ModInt(Integer(m), p));
      SequenceGen<Integer> u(SeqKind::U, Integer(m));
      for (long e = 0; e <= 500; ++e) EXPECT_EQ(um(e), ModInt(u(e), p)) << "p=" << p << " m=" << m << " e=" << e;
    }
}

TEST(SequencesTest, ConcurrentReadsAgree) {
  SequenceGen<Integer> u(SeqKind::U, Integer(3));
  std::vector<Integer> seen(4);
  std::vector<std::thread> pool;
  for (int t = 0; t < 4; ++t) pool.emplace_back([&, t] { seen[t] = u(300 - 10 * t) + u(300); });
  for (auto& t : pool) t.join();
  for (int t = 0; t < 4; ++t) EXPECT_EQ(seen[t], seq_u(Integer(3), 300 - 10 * t) + seq_u(Integer(3), 300));
}

TEST(SequencesTest, PairPeriod) {
  EXPECT_EQ(pair_period(Integer(1), 5), 20u);
  EXPECT_EQ(pair_period(Integer(1), 11), 10u);
  EXPECT_EQ(pair_period(Integer(1), 7), 16u);
  for (std::uint64_t p : {3u, 5u, 7u, 11u, 13u})
    for (long m = 1; m <= 3; ++m) {
      const auto t = pair_period(Integer(m), p);
      EXPECT_EQ(ModInt(seq_u(Integer(m), static_cast<long>(t)), p).value(), 0u);
      EXPECT_EQ(ModInt(seq_u(Integer(m), static_cast<long>(t) + 1), p).value(), 1u);
    }
}

}  // namespace
}  // namespace netbin
