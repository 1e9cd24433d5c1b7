// Copyright 2026 The knapmech Authors
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

#ifndef KNAPMECH_CLI_HPP_
#define KNAPMECH_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace knapmech {

// Runs the command line tool. `args` excludes the program name. Output is
// deterministic: identical arguments and files produce identical bytes.
// Exit codes: 0 success (including a clean audit), 2 usage or parse error,
// 3 audit violation found, 4 certificate Feasible when --expect-infeasible
// was given.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace knapmech

#endif  // KNAPMECH_CLI_HPP_
