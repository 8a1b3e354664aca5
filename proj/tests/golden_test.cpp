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

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <gtest/gtest.h>

namespace jumpback {
namespace {

const char* const kGoldenPath = JUMPBACK_TEST_DATA_DIR "/golden_vectors.csv";

std::vector<GoldenRecord> load_committed() {
    std::ifstream in{kGoldenPath};
    if (!in) throw std::runtime_error(std::string("cannot open ") + kGoldenPath);
    return read_golden_file(in);
}

TEST(GoldenFormat, RoundTrip) {
    const GoldenRecord record{Algorithm::jump_back_hash, 0x0123456789ABCDEFULL, 1000, 669, 2};
    const std::string line = format_golden_record(record);
    EXPECT_EQ(line, "jumpbackhash,0x0123456789abcdef,1000,669,2");
    EXPECT_EQ(parse_golden_record(line), record);
}

TEST(GoldenFormat, MalformedLinesThrow) {
    for (const char* bad : {
             "",
             "jumpbackhash,0x1,10,3",
             "jumpbackhash,0x1,10,3,1,9",
             "nosuchalgo,0x1,10,3,1",
             "jumpbackhash,1,10,3,1",
             "jumpbackhash,0xZZ,10,3,1",
             "jumpbackhash,0x1,0,3,1",
             "jumpbackhash,0x1,2147483648,3,1",
             "jumpbackhash,0x1,10,-3,1",
             "jumpbackhash,0x1,10,3,",
         }) {
        EXPECT_THROW(parse_golden_record(bad), std::invalid_argument) << bad;
    }
}

TEST(GoldenFile, SkipsCommentsBlankLinesAndCarriageReturns) {
    std::istringstream in{"# header\n\nmodulo,0x0000000000000007,5,2,0\r\n"};
    const auto records = read_golden_file(in);
    ASSERT_EQ(records.size(), 1U);
    EXPECT_EQ(records[0], (GoldenRecord{Algorithm::modulo, 7, 5, 2, 0}));
}

TEST(GoldenFile, ReportsLineOfFirstError) {
    std::istringstream in{"# header\nmodulo,0x7,5,2,0\nbroken\n"};
    try {
        read_golden_file(in);
        FAIL() << "expected GoldenFormatError";
    } catch (const GoldenFormatError& e) {
        EXPECT_EQ(e.line(), 3U);
    }
}

TEST(GoldenFile, WriteThenReadIsIdentity) {
    const auto records = compute_golden_records();
    std::stringstream buffer;
    write_golden_file(buffer, records);
    EXPECT_EQ(read_golden_file(buffer), records);
}

TEST(GoldenVectors, CoverEveryAlgorithm) {
    const auto records = load_committed();
    EXPECT_GE(records.size(), 20U);
    std::set<Algorithm> seen;
    for (const auto& r : records) seen.insert(r.algorithm);
    EXPECT_EQ(seen.size(), kAllAlgorithms.size());
}

TEST(GoldenVectors, CommittedFileVerifies) {
    const auto records = load_committed();
    for (int pass = 0; pass < 3; ++pass) {
        const auto mismatches = verify_golden_records(records);
        EXPECT_TRUE(mismatches.empty()) << mismatches.size() << " mismatches, first: "
                                        << format_golden_record(mismatches.front().expected);
    }
}

TEST(GoldenVectors, CommittedFileMatchesRegeneratedBytes) {
    std::ifstream in{kGoldenPath, std::ios::binary};
    std::stringstream committed;
    committed << in.rdbuf();
    std::stringstream regenerated;
    write_golden_file(regenerated, compute_golden_records());
    EXPECT_EQ(committed.str(), regenerated.str());
}

TEST(GoldenVectors, CorruptedRecordIsReported) {
    auto records = load_committed();
    ASSERT_FALSE(records.empty());
    records[3].bucket ^= 1;
    const auto mismatches = verify_golden_records(records);
    ASSERT_EQ(mismatches.size(), 1U);
    EXPECT_EQ(mismatches[0].expected, records[3]);
    EXPECT_EQ(mismatches[0].actual.bucket, records[3].bucket ^ 1);
}

}  // namespace
}  // namespace jumpback
