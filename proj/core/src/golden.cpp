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

#include "jumpback/golden.hpp"

#include <array>
#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>

namespace jumpback {

namespace {

constexpr std::array<Key, 5> kKeys = {
    0x0ULL, 0x7ULL, 0x2AULL, 0x0123456789ABCDEFULL, 0xFFFFFFFFFFFFFFFFULL,
};

constexpr std::array<std::uint32_t, 8> kBucketCounts = {
    1, 2, 5, 10, 100, 1000, 65537, BucketCount::kMax,
};

template <typename T>
T parse_integer(std::string_view field, int base, const char* name) {
    T value{};
    const auto* first = field.data();
    const auto* last = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(first, last, value, base);
    if (field.empty() || ec != std::errc{} || ptr != last) {
        throw std::invalid_argument(std::string("bad ") + name + " field '" + std::string(field) +
                                    "'");
    }
    return value;
}

}  // namespace

std::span<const Key> golden_keys() noexcept { return kKeys; }

std::span<const std::uint32_t> golden_bucket_counts() noexcept { return kBucketCounts; }

std::vector<GoldenRecord> compute_golden_records() {
    std::vector<GoldenRecord> records;
    records.reserve(kAllAlgorithms.size() * kKeys.size() * kBucketCounts.size());
    for (Algorithm algorithm : kAllAlgorithms) {
        for (Key key : kKeys) {
            for (std::uint32_t n : kBucketCounts) {
                const Evaluation e = evaluate(algorithm, key, BucketCount{n});
                records.push_back({algorithm, key, n, e.bucket, e.invocations});
            }
        }
    }
    return records;
}

std::string format_golden_record(const GoldenRecord& record) {
    char key_hex[19];
    std::snprintf(key_hex, sizeof key_hex, "0x%016llx",
                  static_cast<unsigned long long>(record.key));
    std::string line{algorithm_name(record.algorithm)};
    line += ',';
    line += key_hex;
    line += ',' + std::to_string(record.n);
    line += ',' + std::to_string(record.bucket);
    line += ',' + std::to_string(record.invocations);
    return line;
}

GoldenRecord parse_golden_record(std::string_view line) {
    std::array<std::string_view, 5> fields;
    std::size_t count = 0;
    while (true) {
        const auto comma = line.find(',');
        if (count == fields.size()) {
            throw std::invalid_argument("too many fields");
        }
        fields[count++] = line.substr(0, comma);
        if (comma == std::string_view::npos) break;
        line.remove_prefix(comma + 1);
    }
    if (count != fields.size()) {
        throw std::invalid_argument("expected 5 fields, got " + std::to_string(count));
    }

    GoldenRecord record;
    const auto algorithm = parse_algorithm(fields[0]);
    if (!algorithm) {
        throw std::invalid_argument("unknown algorithm '" + std::string(fields[0]) + "'");
    }
    record.algorithm = *algorithm;

    std::string_view key_hex = fields[1];
    if (key_hex.size() < 3 || key_hex.substr(0, 2) != "0x") {
        throw std::invalid_argument("key must be 0x-prefixed hex");
    }
    record.key = parse_integer<Key>(key_hex.substr(2), 16, "key");
    const auto n = parse_integer<std::uint64_t>(fields[2], 10, "n");
    if (n < 1 || n > BucketCount::kMax) {
        throw std::invalid_argument("n out of range");
    }
    record.n = static_cast<std::uint32_t>(n);
    record.bucket = parse_integer<BucketIndex>(fields[3], 10, "bucket");
    record.invocations = parse_integer<std::uint64_t>(fields[4], 10, "invocations");
    return record;
}

void write_golden_file(std::ostream& out, std::span<const GoldenRecord> records) {
    out << "# algo,key_hex,n,bucket,invocations\n";
    for (const auto& record : records) {
        out << format_golden_record(record) << '\n';
    }
}

std::vector<GoldenRecord> read_golden_file(std::istream& in) {
    std::vector<GoldenRecord> records;
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        try {
            records.push_back(parse_golden_record(line));
        } catch (const std::invalid_argument& e) {
            throw GoldenFormatError(line_number, e.what());
        }
    }
    return records;
}

std::vector<GoldenMismatch> verify_golden_records(std::span<const GoldenRecord> records) {
    std::vector<GoldenMismatch> mismatches;
    for (const auto& record : records) {
        const Evaluation actual = evaluate(record.algorithm, record.key, BucketCount{record.n});
        if (actual.bucket != record.bucket || actual.invocations != record.invocations) {
            mismatches.push_back({record, actual});
        }
    }
    return mismatches;
}

}  // namespace jumpback
