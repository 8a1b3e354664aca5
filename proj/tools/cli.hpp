// Copyright 2026 The jumpback Authors
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

#ifndef JUMPBACK_TOOLS_CLI_HPP_
#define JUMPBACK_TOOLS_CLI_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace jumpback::cli {

/// Process exit codes.
enum ExitCode : int {
    kExitOk = 0,
    kExitCheckFailed = 1,
    kExitUsage = 2,
};

/// Decimal or 0x-prefixed hexadecimal 64-bit value.
std::optional<std::uint64_t> parse_u64(std::string_view text);

/// `list:<n>,<n>,...`, `geom:<n0>:<factor>` or `range:<lo>:<hi>` (inclusive).
/// Every value must be a valid bucket count. Throws std::invalid_argument.
std::vector<std::uint32_t> parse_n_spec(std::string_view spec);

/// %.9g; "nan" for NaN.
std::string format_float(double value);

/// Runs the tool. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jumpback::cli

#endif  // JUMPBACK_TOOLS_CLI_HPP_
