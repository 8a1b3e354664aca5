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

// Deterministic pseudorandom generation.
//
// All hash algorithms seed a SplitMix64 generator with the key verbatim and
// draw 64-bit words from it. Every derived sampler below reads whole words;
// the number of words drawn is what the consumption analysis counts.

#ifndef JUMPBACK_PRG_HPP_
#define JUMPBACK_PRG_HPP_

#include <cmath>
#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <utility>

namespace jumpback {

/// Anything that yields uniformly distributed 64-bit words.
template <typename G>
concept WordGenerator = requires(G& g) {
    { g.next_u64() } -> std::same_as<std::uint64_t>;
};

inline constexpr std::uint64_t kSplitMixGamma = 0x9E3779B97F4A7C15ULL;

/// Raw SplitMix64 state. Advancing it is a pure function of the state.
struct GeneratorState {
    std::uint64_t state = 0;

    friend constexpr bool operator==(GeneratorState, GeneratorState) = default;
};

constexpr std::uint64_t splitmix_mix(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// One SplitMix64 step: returns the successor state and the output word.
constexpr std::pair<GeneratorState, std::uint64_t> splitmix_next(GeneratorState g) noexcept {
    const std::uint64_t next = g.state + kSplitMixGamma;
    return {GeneratorState{next}, splitmix_mix(next)};
}

/// Mutable SplitMix64 engine. Single owner; create one per evaluation.
class SplitMix64 {
public:
    using result_type = std::uint64_t;

    constexpr explicit SplitMix64(std::uint64_t seed) noexcept : state_{seed} {}

    constexpr std::uint64_t next_u64() noexcept {
        auto [next, out] = splitmix_next(state_);
        state_ = next;
        return out;
    }

    /// Output number `index` (zero-based) of the stream seeded with `seed`,
    /// computed without generating the preceding outputs.
    static constexpr std::uint64_t output_at(std::uint64_t seed, std::uint64_t index) noexcept {
        return splitmix_mix(seed + (index + 1) * kSplitMixGamma);
    }

    constexpr GeneratorState state() const noexcept { return state_; }

    // UniformRandomBitGenerator interface, for use with <random>/<algorithm>.
    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return ~result_type{0}; }
    constexpr result_type operator()() noexcept { return next_u64(); }

private:
    GeneratorState state_;
};

/// SplitMix64 that counts every 64-bit word it hands out.
class CountingGenerator {
public:
    constexpr explicit CountingGenerator(std::uint64_t seed) noexcept : inner_{seed} {}

    constexpr std::uint64_t next_u64() noexcept {
        ++invocations_;
        return inner_.next_u64();
    }

    constexpr std::uint64_t invocations() const noexcept { return invocations_; }
    constexpr GeneratorState state() const noexcept { return inner_.state(); }

private:
    SplitMix64 inner_;
    std::uint64_t invocations_ = 0;
};

constexpr std::uint64_t invocations(const CountingGenerator& g) noexcept {
    return g.invocations();
}

// Conversions from a single raw word. Exposed so the samplers can be checked
// against hand-picked words.

/// Top 53 bits scaled into [0, 1).
constexpr double unit_from_word(std::uint64_t v) noexcept {
    return static_cast<double>(v >> 11) * 0x1.0p-53;
}

inline double exponential_from_unit(double u) noexcept {
    return -std::log(1.0 - u);
}

/// floor(v * s / 2^64).
constexpr std::uint64_t multiply_high(std::uint64_t v, std::uint64_t s) noexcept {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(v) * s) >> 64);
}

template <WordGenerator G>
double next_unit(G& g) {
    return unit_from_word(g.next_u64());
}

template <WordGenerator G>
double next_exponential(G& g) {
    return exponential_from_unit(next_unit(g));
}

/// Unbiased uniform integer in [0, s).
///
/// s == 1 draws nothing. Powers of two take the low bits of one word. Other
/// ranges use the multiply-high method and reject words whose low product
/// half falls in the biased region, which happens with probability < s/2^64.
template <WordGenerator G>
std::uint64_t next_bounded(G& g, std::uint64_t s) {
    if (s == 0) {
        throw std::domain_error("next_bounded: range must be positive");
    }
    if (s == 1) {
        return 0;
    }
    if ((s & (s - 1)) == 0) {
        return g.next_u64() & (s - 1);
    }
    auto product = static_cast<unsigned __int128>(g.next_u64()) * s;
    auto low = static_cast<std::uint64_t>(product);
    if (low < s) {
        const std::uint64_t threshold = (0 - s) % s;
        while (low < threshold) {
            product = static_cast<unsigned __int128>(g.next_u64()) * s;
            low = static_cast<std::uint64_t>(product);
        }
    }
    return static_cast<std::uint64_t>(product >> 64);
}

}  // namespace jumpback

#endif  // JUMPBACK_PRG_HPP_
