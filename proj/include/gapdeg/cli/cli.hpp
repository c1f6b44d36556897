/*
   Copyright 2026 The gapdeg Authors

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

#ifndef GAPDEG_CLI_CLI_HPP
#define GAPDEG_CLI_CLI_HPP

#include <ostream>

namespace gapdeg::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;  ///< a verification failed or a computation could not finish
inline constexpr int kExitUsage = 2;

/// Parses the command line and runs one subcommand, writing results to out
/// and diagnostics to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gapdeg::cli

#endif
