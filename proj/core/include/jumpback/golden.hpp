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

// Golden-vector files.
//
// One record per line, `algo,key_hex,n,bucket,invocations`, e.g.
//
//   jumpbackhash-packed,0x0123456789abcdef,1000,519,1
//
// key_hex is 0x followed by 16 lowercase hex digits; the other fields are
// decimal. Blank lines and lines starting with '#' are ignored.

#ifndef JUMPBACK_GOLDEN_HPP_
#define JUMPBACK_GOLDEN_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "jumpback/hashers.hpp"

namespace jumpback {

struct GoldenRecord {
    Algorithm algorithm = Algorithm::jump_back_hash_packed;
    Key key = 0;
    std::uint32_t n = 1;
    BucketIndex bucket = 0;
    std::uint64_t invocations = 0;

    friend bool operator==(const GoldenRecord&, const GoldenRecord&) = default;
};

class GoldenFormatError : public std::runtime_error {
public:
    GoldenFormatError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_{line} {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Keys and bucket counts of the built-in matrix, crossed with every algorithm.
std::span<const Key> golden_keys() noexcept;
std::span<const std::uint32_t> golden_bucket_counts() noexcept;

/// Evaluates the built-in matrix with the current build.
std::vector<GoldenRecord> compute_golden_records();

std::string format_golden_record(const GoldenRecord& record);

/// Throws std::invalid_argument on malformed input.
GoldenRecord parse_golden_record(std::string_view line);

void write_golden_file(std::ostream& out, std::span<const GoldenRecord> records);

/// Throws GoldenFormatError naming the offending line.
std::vector<GoldenRecord> read_golden_file(std::istream& in);

struct GoldenMismatch {
    GoldenRecord expected;
    Evaluation actual;
};

/// Re-evaluates every record and returns those whose bucket or invocation
/// count differs.
std::vector<GoldenMismatch> verify_golden_records(std::span<const GoldenRecord> records);

}  // namespace jumpback

#endif  // JUMPBACK_GOLDEN_HPP_
