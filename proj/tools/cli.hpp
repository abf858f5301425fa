// Copyright 2026 The dppsum Authors.
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

// The dppsum command-line interface, callable in-process for testing.

#ifndef DPPSUM_TOOLS_CLI_HPP_
#define DPPSUM_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace dppsum {

// Process exit codes. Each failure class has its own code.
enum ExitCode : int {
  kExitOk = 0,
  kExitInternal = 1,
  kExitUsage = 2,
  kExitInvalidArgument = 3,
  kExitDomain = 4,
  kExitNumerical = 5,
  kExitIo = 6,
  kExitFormat = 7,
};

// `args` excludes the program name. Results go to `out`; diagnostics and
// warnings go to `err` as single lines.
int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dppsum

#endif  // DPPSUM_TOOLS_CLI_HPP_
