// Copyright 2026 The gqnn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gqnn::cli {

/// Process exit codes.
enum ExitCode : int {
    kOk = 0,
    kBadInput = 1,       // malformed config, flags or assignments
    kNoSolution = 2,     // no weight satisfies the dataset
    kQubitBudget = 3,    // circuit exceeds the simulator's qubit cap
    kMismatch = 4,       // verify: some sample fails; train: no verified weight
};

/// Verbosity of the human-readable stderr output, read from GQNN_LOG
/// ("quiet", "info" or "debug"; default "info").
enum class LogLevel { Quiet, Info, Debug };
LogLevel log_level_from_env();

/// Runs `gqnn <subcommand> ...`. `args` excludes the program name. JSON
/// reports go to `out` unless --out names a file; tables and diagnostics go
/// to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err,
        LogLevel level = LogLevel::Info);

}  // namespace gqnn::cli
