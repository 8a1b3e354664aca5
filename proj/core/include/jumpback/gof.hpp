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

// Goodness-of-fit tests against the uniform distribution over [0, n).

#ifndef JUMPBACK_GOF_HPP_
#define JUMPBACK_GOF_HPP_

#include <cstdint>
#include <span>

namespace jumpback {

enum class GofKind { none, g_test, ks_test };

struct GofResult {
    GofKind kind = GofKind::none;
    double statistic = 0.0;
    /// Cells minus one for the G-test, zero otherwise.
    std::uint64_t degrees_of_freedom = 0;
    std::uint64_t sample_size = 0;
    double p_value = 1.0;

    bool rejected_at(double alpha) const noexcept { return p_value < alpha; }
};

/// P(X >= x) for X ~ chi-square(dof).
double chi_square_survival(double x, double dof);

/// P(K > lambda) for the limiting Kolmogorov distribution.
double kolmogorov_survival(double lambda);

/// G = 2 sum O_i ln(O_i / E_i) with E_i = total / cells; empty cells add 0.
double g_statistic(std::span<const std::uint64_t> observed);

/// Likelihood-ratio test of `observed` (one count per bucket) against the
/// uniform distribution. Throws std::domain_error unless observed.size() == n,
/// n >= 2 and the total is at least 100 n.
GofResult g_test(std::span<const std::uint64_t> observed, std::uint64_t n);

/// Two-sided KS statistic of (b mod n + 1) / n against U(0, 1].
double ks_statistic(std::span<const std::uint64_t> buckets, std::uint64_t n);

/// Kolmogorov-Smirnov test of bucket samples against uniformity, with the
/// asymptotic p-value. Meant for n too large to histogram; the discreteness
/// bias of the statistic is at most 1/n. Throws std::domain_error for an
/// empty sample or n < 2.
GofResult ks_test(std::span<const std::uint64_t> buckets, std::uint64_t n);

}  // namespace jumpback

#endif  // JUMPBACK_GOF_HPP_
