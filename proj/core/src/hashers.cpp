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

#include "jumpback/hashers.hpp"

#include <stdexcept>

namespace jumpback {

namespace {

struct NameEntry {
    Algorithm algorithm;
    std::string_view canonical;
    std::string_view enumerator;
};

constexpr std::array<NameEntry, kAllAlgorithms.size()> kNames = {{
    {Algorithm::modulo, "modulo", "modulo"},
    {Algorithm::random, "random", "random"},
    {Algorithm::icws, "icws", "icws"},
    {Algorithm::jump_hash, "jumphash", "jump_hash"},
    {Algorithm::jumping_backwards, "jumping-backwards", "jumping_backwards"},
    {Algorithm::jumping_backwards_improved_opt1, "jumping-backwards-opt1",
     "jumping_backwards_improved_opt1"},
    {Algorithm::jumping_backwards_improved_opt2, "jumping-backwards-opt2",
     "jumping_backwards_improved_opt2"},
    {Algorithm::jump_back_hash, "jumpbackhash", "jump_back_hash"},
    {Algorithm::jump_back_hash_packed, "jumpbackhash-packed", "jump_back_hash_packed"},
}};

// One generic body per algorithm, instantiated for each generator flavor.
template <WordGenerator G>
BucketIndex run(Algorithm algorithm, G& g, Key key, std::uint32_t n, EvaluationTrace* trace) {
    using algo::CandidateSampling;
    switch (algorithm) {
        case Algorithm::modulo:
            return static_cast<BucketIndex>(key % n);
        case Algorithm::random:
            return static_cast<BucketIndex>(algo::random_assign(g, n));
        case Algorithm::icws:
            return static_cast<BucketIndex>(algo::icws(g, n, trace));
        case Algorithm::jump_hash:
            return static_cast<BucketIndex>(algo::jump_hash(g, n, trace));
        case Algorithm::jumping_backwards:
            return static_cast<BucketIndex>(algo::jumping_backwards(g, n, trace));
        case Algorithm::jumping_backwards_improved_opt1:
            return static_cast<BucketIndex>(algo::jumping_backwards_improved(
                g, n, CandidateSampling::below_previous, trace));
        case Algorithm::jumping_backwards_improved_opt2:
            return static_cast<BucketIndex>(algo::jumping_backwards_improved(
                g, n, CandidateSampling::enclosing_power_of_two, trace));
        case Algorithm::jump_back_hash:
            return n <= 1 ? 0 : algo::jump_back_hash(g, n, trace);
        case Algorithm::jump_back_hash_packed:
            return n <= 1 ? 0 : algo::jump_back_hash_packed(g, n, trace);
    }
    return 0;
}

}  // namespace

std::string_view algorithm_name(Algorithm algorithm) noexcept {
    for (const auto& entry : kNames) {
        if (entry.algorithm == algorithm) return entry.canonical;
    }
    return "unknown";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) noexcept {
    for (const auto& entry : kNames) {
        if (name == entry.canonical || name == entry.enumerator) return entry.algorithm;
    }
    return std::nullopt;
}

BucketIndex modulo_hash(Key key, BucketCount n) noexcept {
    return static_cast<BucketIndex>(key % n.value());
}

BucketIndex random_hash(Key key, BucketCount n) noexcept {
    SplitMix64 g{key};
    return static_cast<BucketIndex>(algo::random_assign(g, n.value()));
}

BucketIndex icws_hash(Key key, BucketCount n) noexcept {
    SplitMix64 g{key};
    return static_cast<BucketIndex>(algo::icws(g, n.value()));
}

BucketIndex jump_hash(Key key, BucketCount n) noexcept {
    SplitMix64 g{key};
    return static_cast<BucketIndex>(algo::jump_hash(g, n.value()));
}

BucketIndex jumping_backwards(Key key, BucketCount n) noexcept {
    SplitMix64 g{key};
    return static_cast<BucketIndex>(algo::jumping_backwards(g, n.value()));
}

BucketIndex jumping_backwards_improved(Key key, BucketCount n, int option) {
    if (option != 1 && option != 2) {
        throw std::domain_error("jumping_backwards_improved: option must be 1 or 2");
    }
    SplitMix64 g{key};
    return static_cast<BucketIndex>(algo::jumping_backwards_improved(
        g, n.value(), static_cast<algo::CandidateSampling>(option)));
}

BucketIndex jump_back_hash(Key key, BucketCount n) noexcept {
    if (n.value() <= 1) return 0;
    SplitMix64 g{key};
    return algo::jump_back_hash(g, n.value());
}

BucketIndex jump_back_hash_packed(Key key, BucketCount n) noexcept {
    if (n.value() <= 1) return 0;
    SplitMix64 g{key};
    return algo::jump_back_hash_packed(g, n.value());
}

BucketIndex hash(Algorithm algorithm, Key key, BucketCount n) noexcept {
    SplitMix64 g{key};
    return run(algorithm, g, key, n.value(), nullptr);
}

Evaluation evaluate(Algorithm algorithm, Key key, BucketCount n) noexcept {
    CountingGenerator g{key};
    const BucketIndex bucket = run(algorithm, g, key, n.value(), nullptr);
    return {bucket, g.invocations()};
}

std::pair<BucketIndex, EvaluationTrace> evaluate_traced(const HasherConfig& config, Key key,
                                                       BucketCount n) {
    CountingGenerator g{key};
    EvaluationTrace trace;
    const BucketIndex bucket = run(config.algorithm, g, key, n.value(), &trace);
    trace.invocations = g.invocations();
    return {bucket, std::move(trace)};
}

}  // namespace jumpback
