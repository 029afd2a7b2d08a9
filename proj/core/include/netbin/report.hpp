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

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace netbin {

enum class Status {
  pass,
  fail,
  hypothesis_not_satisfied,
  discrepancy_documented,
};

/// "pass", "fail", "hypothesis-not-satisfied", "discrepancy-documented".
std::string_view to_string(Status s);
/// Inverse of to_string; throws std::invalid_argument on unknown text.
Status parse_status(std::string_view text);

/// One checked location that did not match (or the hypothesis that failed).
/// Every number is an exact decimal string.
struct Witness {
  std::string location;
  std::string expected;
  std::string actual;

  friend bool operator==(const Witness&, const Witness&) = default;
};

/// Outcome of verifying one claim at one parameter point.
/// Invariant: status == pass exactly when witnesses is empty.
struct Report {
  std::string claim_id;
  std::map<std::string, std::string> params;
  Status status = Status::pass;
  std::vector<Witness> witnesses;

  /// Number of individual equalities checked; informational, not serialized.
  std::size_t checks = 0;
  /// Number of failed equalities, which may exceed witnesses.size().
  std::size_t violations = 0;

  static constexpr std::size_t kMaxWitnesses = 16;

  Report() = default;
  explicit Report(std::string_view id) : claim_id(id) {}

  Report& with(std::string key, std::string value) {
    params[std::move(key)] = std::move(value);
    return *this;
  }

  /// Records a mismatch and marks the report failed.
  void fail(std::string location, std::string expected, std::string actual);
  /// Records one equality check, failing the report when the sides differ.
  void check(bool ok, std::string location, std::string expected, std::string actual) {
    ++checks;
    if (!ok) fail(std::move(location), std::move(expected), std::move(actual));
  }
  /// Lazily formatted variant of check(); the formatter runs only on mismatch.
  template <class Describe>
  void check_lazy(bool ok, Describe describe) {
    ++checks;
    if (!ok) {
      auto [location, expected, actual] = describe();
      fail(std::move(location), std::move(expected), std::move(actual));
    }
  }

  void mark_hypothesis_not_satisfied(std::string condition, std::string observed);
  /// Turns a failed report into a documented discrepancy, keeping witnesses.
  void mark_discrepancy_documented();

  bool passed() const { return status == Status::pass; }
};

/// True when no report has status fail.
bool all_ok(const std::vector<Report>& reports);

}  // namespace netbin
