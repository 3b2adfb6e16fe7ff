// Copyright 2026 The pauli-dfs Authors
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

#ifndef PAULI_DFS_CLI_H
#define PAULI_DFS_CLI_H

#include <iosfwd>
#include <string>
#include <vector>

namespace pdfs::cli {

enum ExitCode : int {
    kSuccess = 0,
    kUsageError = 1,
    kAnalysisRefused = 2,
    kNumericFailure = 3,
};

/// Runs one command. `args` excludes the program name. Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace pdfs::cli

#endif
