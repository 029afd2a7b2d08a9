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

#include <map>

#include <gtest/gtest.h>

#include "netbin/fibmat.hpp"
#include "netbin/modular.hpp"
#include "oracles.hpp"

namespace netbin {
namespace {

const std::uint64_t kPrimes[] = {3, 5, 7, 11, 13, 29};

std::map<std::string, Report> by_id(const std::vector<Report>& reports) {
  std::map<std::string, Report> out;
  for (const auto& r : reports) out[r.claim_id] = r;
  return out;
}

IntMatrix lift(const ModMatrix& a) { return a.map([](const ModInt& v) { return Integer(static_cast<unsigned long>(v.value())); }); }

TEST(PrimeTest, TrialDivision) {
  EXPECT_FALSE(is_prime(0));
  EXPECT_FALSE(is_prime(1));
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(29));
  EXPECT_FALSE(is_prime(91));
  EXPECT_THROW(entry_point(Integer(1), 9), std::invalid_argument);
}

TEST(EntryPointTest, Examples) {
  EXPECT_EQ(entry_point(Integer(1), 5), 5u);
  EXPECT_EQ(entry_point(Integer(1), 7), 8u);
  EXPECT_EQ(entry_point(Integer(2), 5), 3u);
  EXPECT_EQ(entry_point(Integer(1), 2), 3u);
  for (auto p : kPrimes)
    for (long m = 1; m <= 3; ++m) EXPECT_EQ(entry_point(Integer(m), p), oracle::entry_point_brute(Integer(m), p));
}

TEST(MatPowModTest, Examples) {
  const auto t2 = build_T(FibSpec<Integer>(2, Integer(1)));
  EXPECT_EQ(lift(mat_pow_mod(t2, 5, 5)), IntMatrix({{Integer(3), Integer(0)}, {Integer(0), Integer(3)}}));
  EXPECT_EQ(lift(mat_pow_mod(t2, 10, 11)), IntMatrix::identity(2, Integer(0)));
  EXPECT_EQ(lift(mat_pow_mod(t2, 0, 7)), IntMatrix::identity(2, Integer(0)));
  const auto t5 = build_T(FibSpec<Integer>(5, Integer(3)));
  for (unsigned e = 0; e <= 30; e += 7) EXPECT_EQ(lift(mat_pow_mod(t5, e, 13)), oracle::pow_mod(t5, e, 13));
}

TEST(EntryPointTheoremTest, FibonacciAtFive) {
  auto r = by_id(verify_entry_point_theorem(2, Integer(1), 5));
  EXPECT_TRUE(r["mod.entry-scalar"].passed());
  EXPECT_TRUE(r["mod.entry-parity"].passed());
  EXPECT_TRUE(r["mod.fourfold"].passed());
  EXPECT_EQ(r["mod.double-even"].status, Status::hypothesis_not_satisfied);
  EXPECT_EQ(r["mod.entry-scalar"].params["p_divides_D"], "yes");
  const auto& printed = r["mod.double-odd-printed"];
  EXPECT_EQ(printed.status, Status::discrepancy_documented);
  ASSERT_EQ(printed.witnesses.size(), 1u);
  EXPECT_EQ(printed.witnesses[0].expected, "3*I");
  EXPECT_EQ(printed.witnesses[0].actual, "4*I");
  EXPECT_TRUE(r["mod.double-odd-derived"].passed());
}

TEST(EntryPointTheoremTest, OddDimensionAtFive) {
  // n = 3: T^5 = (-1)^(1*5) I = -I mod 5.
  const auto t = build_T(FibSpec<Integer>(3, Integer(1)));
  EXPECT_EQ(oracle::pow_mod(t, 5, 5), IntMatrix::identity(3, Integer(0)).map([](const Integer& v) { return Integer(v * 4); }));
  EXPECT_TRUE(by_id(verify_entry_point_theorem(3, Integer(1), 5))["mod.entry-parity"].passed());
}

TEST(EntryPointTheoremTest, Grid) {
  for (auto p : kPrimes)
    for (long m = 1; m <= 3; ++m)
      for (long n = 2; n <= 8; ++n) {
        auto r = by_id(verify_entry_point_theorem(n, Integer(m), p));
        for (const char* id : {"mod.entry-scalar", "mod.entry-parity", "mod.fourfold"})
          EXPECT_TRUE(r[id].passed()) << id << " n=" << n << " m=" << m << " p=" << p;
        EXPECT_NE(r["mod.double-even"].status, Status::fail);
        EXPECT_NE(r["mod.double-odd-derived"].status, Status::fail);
        EXPECT_NE(r["mod.double-odd-printed"].status, Status::fail);
      }
}

TEST(UpTheoremTest, Examples) {
  auto eleven = by_id(verify_up_theorems(2, Integer(1), 11));
  EXPECT_TRUE(eleven["mod.up-minus"].passed());
  EXPECT_EQ(eleven["mod.up-plus"].status, Status::hypothesis_not_satisfied);
  auto seven2 = by_id(verify_up_theorems(2, Integer(1), 7));
  auto seven3 = by_id(verify_up_theorems(3, Integer(1), 7));
  EXPECT_TRUE(seven2["mod.up-plus"].passed());
  EXPECT_TRUE(seven3["mod.up-plus"].passed());
  auto five = by_id(verify_up_theorems(2, Integer(1), 5));
  EXPECT_EQ(five["mod.up-minus"].status, Status::hypothesis_not_satisfied);
  EXPECT_EQ(five["mod.up-plus"].status, Status::hypothesis_not_satisfied);
}

TEST(UpTheoremTest, PDividesMForcesIdentityNotMinusIdentity) {
  // m = 3, p = 3: U_2 = 3 and U_4 = 33, so both hypotheses hold; T^2 = I
  // already, hence T^4 = I rather than -I for even n.
  const auto t = build_T(FibSpec<Integer>(2, Integer(3)));
  EXPECT_TRUE(oracle::is_identity(oracle::pow_mod(t, 4, 3)));
  auto r = by_id(verify_up_theorems(2, Integer(3), 3));
  EXPECT_TRUE(r["mod.up-minus"].passed());
  EXPECT_EQ(r["mod.up-plus"].status, Status::fail);
  EXPECT_TRUE(by_id(verify_up_theorems(3, Integer(3), 3))["mod.up-plus"].passed());
}

TEST(RootTheoremTest, Examples) {
  auto eleven = by_id(verify_root_theorem(2, Integer(1), 11));
  EXPECT_TRUE(eleven["mod.root"].passed());
  EXPECT_EQ(eleven["mod.root"].params["root"], "4");
  EXPECT_TRUE(eleven["mod.period"].passed());
  EXPECT_EQ(by_id(verify_root_theorem(2, Integer(1), 7))["mod.root"].status, Status::hypothesis_not_satisfied);
  auto thirteen = by_id(verify_root_theorem(2, Integer(3), 13));
  EXPECT_EQ(thirteen["mod.root"].status, Status::hypothesis_not_satisfied);
  EXPECT_EQ(thirteen["mod.root"].params["p_divides_D"], "yes");
}

TEST(RootTheoremTest, Grid) {
  for (auto p : kPrimes)
    for (long m = 1; m <= 3; ++m)
      for (long n = 2; n <= 8; ++n)
        for (const auto& r : verify_root_theorem(n, Integer(m), p))
          EXPECT_NE(r.status, Status::fail) << r.claim_id << " n=" << n << " m=" << m << " p=" << p;
}

TEST(OrderTest, MatchesBruteForce) {
  EXPECT_EQ(order_mod_p(1, Integer(4), 7), 1u);
  EXPECT_EQ(order_mod_p(2, Integer(1), 5), 20u);
  EXPECT_EQ(10u % order_mod_p(2, Integer(1), 11), 0u);
  for (auto p : kPrimes)
    for (long m = 1; m <= 3; ++m)
      for (long n = 1; n <= 6; ++n) {
        const auto t = order_mod_p(n, Integer(m), p);
        EXPECT_EQ(t, oracle::order_brute(build_T(FibSpec<Integer>(n, Integer(m))), p)) << n << " " << m << " " << p;
        EXPECT_EQ((4 * entry_point(Integer(m), p)) % t, 0u);
        EXPECT_TRUE(verify_order(n, Integer(m), p).passed());
      }
}

}  // namespace
}  // namespace netbin
