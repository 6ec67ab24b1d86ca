// Copyright 2026 The acalg Authors. All Rights Reserved.
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

#ifndef ACALG_TOOLS_CLI_HPP
#define ACALG_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace acalg::cli {

enum ExitCode { kOk = 0, kDomainError = 1, kUsageError = 2 };

/// Runs the command line `args` (without the program name). Results go to
/// `out`; usage diagnostics go to `err`. Engine errors are reported on `out`
/// as a JSON object {"error": {...}}.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace acalg::cli

#endif  // ACALG_TOOLS_CLI_HPP
