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

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "netbin/report.hpp"

namespace netbin::cli {

/// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line (without the program name). Reports go to out
/// (or the --out file), diagnostics and the summary to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// One line per report followed by indented witness lines.
std::string format_text(const Report& r);
/// One JSON object per report on a single line.
std::string format_json(const Report& r);

using Task = std::function<std::vector<Report>()>;

/// Runs tasks on up to jobs threads and concatenates their reports in task
/// order, whatever order they finish in. The first exception thrown by a task
/// is rethrown after all workers stop.
std::vector<Report> run_tasks(const std::vector<Task>& tasks, unsigned jobs);

}  // namespace netbin::cli
