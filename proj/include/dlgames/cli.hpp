// Copyright 2026 The dlgames Authors
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

// Command-line front end. Exit codes: 0 equivalent / satisfied / pass,
// 1 distinguishable / unsatisfied / fail, 2 usage or input error. The last
// line of every successful command is a machine-readable VERDICT line.

#ifndef DLGAMES_CLI_HPP_
#define DLGAMES_CLI_HPP_

#include <istream>
#include <ostream>
#include <string>
#include <vector>

namespace dlgames {

inline constexpr int kExitEquivalent = 0;
inline constexpr int kExitDistinguished = 1;
inline constexpr int kExitUsage = 2;

// `args` excludes the program name.
int run_command(const std::vector<std::string>& args, std::istream& in,
                std::ostream& out, std::ostream& err);

}  // namespace dlgames

#endif  // DLGAMES_CLI_HPP_
