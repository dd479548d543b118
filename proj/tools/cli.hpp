/*
   Copyright 2026 The ppbinom Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef PPBINOM_TOOLS_CLI_HPP
#define PPBINOM_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace ppbinom::cli {

enum ExitCode : int {
    kPass = 0,
    kMismatch = 1,
    kUsage = 2,
};

/// Runs one command. `args` excludes the program name. Results go to
/// `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ppbinom::cli

#endif  // PPBINOM_TOOLS_CLI_HPP
