// Copyright 2026 The Authors.
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

#ifndef EXMAT_CLI_H_
#define EXMAT_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace exmat::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
// The command ran but its result document is not valid.
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitPrecondition = 3;
inline constexpr int kExitInvariant = 4;

// Runs `exmat` with `args` (without the program name). Exactly one JSON
// document goes to `out`; diagnostics go to `err`.
int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace exmat::cli

#endif  // EXMAT_CLI_H_
