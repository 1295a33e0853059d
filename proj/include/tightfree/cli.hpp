// Copyright 2026 The tightfree Authors
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

#ifndef TIGHTFREE_CLI_HPP_
#define TIGHTFREE_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace tightfree::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCycleFound = 1;
inline constexpr int kExitAborted = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitData = 65;
inline constexpr int kExitIo = 74;

inline constexpr unsigned long long kDefaultSeed = 0xC0FFEE;

// Runs one subcommand; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace tightfree::cli

#endif  // TIGHTFREE_CLI_HPP_
