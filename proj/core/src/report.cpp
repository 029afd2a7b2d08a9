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

#include "netbin/report.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace netbin {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::hypothesis_not_satisfied:
      return "hypothesis-not-satisfied";
    case Status::discrepancy_documented:
      return "discrepancy-documented";
  }
  return "fail";
}

Status parse_status(std::string_view text) {
  for (Status s : {Status::pass, Status::fail, Status::hypothesis_not_satisfied,
                   Status::discrepancy_documented})
    if (to_string(s) == text) return s;
  throw std::invalid_argument("unknown status: " + std::string(text));
}

void Report::fail(std::string location, std::string expected, std::string actual) {
  status = Status::fail;
  ++violations;
  if (witnesses.size() < kMaxWitnesses)
    witnesses.push_back({std::move(location), std::move(expected), std::move(actual)});
}

void Report::mark_hypothesis_not_satisfied(std::string condition, std::string observed) {
  status = Status::hypothesis_not_satisfied;
  witnesses.push_back({"hypothesis", std::move(condition), std::move(observed)});
}

void Report::mark_discrepancy_documented() {
  if (status == Status::fail) status = Status::discrepancy_documented;
}

bool all_ok(const std::vector<Report>& reports) {
  return std::none_of(reports.begin(), reports.end(),
                      [](const Report& r) { return r.status == Status::fail; });
}

}  // namespace netbin
