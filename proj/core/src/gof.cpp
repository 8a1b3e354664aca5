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

#include "jumpback/gof.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <vector>

#include <boost/math/special_functions/gamma.hpp>

namespace jumpback {

namespace {

constexpr double kSeriesTolerance = 1e-10;

}  // namespace

double chi_square_survival(double x, double dof) {
    if (!(dof > 0.0)) throw std::domain_error("chi-square needs positive degrees of freedom");
    if (!(x > 0.0)) return 1.0;
    if (std::isinf(x)) return 0.0;
    return boost::math::gamma_q(0.5 * dof, 0.5 * x);
}

double kolmogorov_survival(double lambda) {
    if (!(lambda > 0.0)) return 1.0;
    if (lambda < 1.18) {
        // Theta-function form.
        // P(K <= l) = sqrt(2 pi) / l * sum_k exp(-(2k-1)^2 pi^2 / (8 l^2))
        const double c = -std::numbers::pi * std::numbers::pi / (8.0 * lambda * lambda);
        double sum = 0.0;
        for (int k = 1;; ++k) {
            const double odd = 2.0 * k - 1.0;
            const double term = std::exp(c * odd * odd);
            sum += term;
            if (term < kSeriesTolerance * sum) break;
        }
        const double cdf = std::sqrt(2.0 * std::numbers::pi) / lambda * sum;
        return std::clamp(1.0 - cdf, 0.0, 1.0);
    }
    // P(K > l) = 2 sum_k (-1)^(k-1) exp(-2 k^2 l^2)
    double sum = 0.0;
    double sign = 1.0;
    for (int k = 1; k < 1000; ++k) {
        const double term = std::exp(-2.0 * k * k * lambda * lambda);
        sum += sign * term;
        if (term < kSeriesTolerance) break;
        sign = -sign;
    }
    return std::clamp(2.0 * sum, 0.0, 1.0);
}

double g_statistic(std::span<const std::uint64_t> observed) {
    if (observed.empty()) return 0.0;
    const double total =
        static_cast<double>(std::accumulate(observed.begin(), observed.end(), std::uint64_t{0}));
    const double expected = total / static_cast<double>(observed.size());
    double g = 0.0;
    for (std::uint64_t o : observed) {
        if (o == 0) continue;
        const double od = static_cast<double>(o);
        g += od * std::log(od / expected);
    }
    // Rounding can leave a tiny negative value for perfectly even counts.
    return std::max(0.0, 2.0 * g);
}

GofResult g_test(std::span<const std::uint64_t> observed, std::uint64_t n) {
    if (n < 2) throw std::domain_error("g_test needs n >= 2");
    if (observed.size() != n) throw std::domain_error("g_test needs one count per bucket");
    const std::uint64_t total =
        std::accumulate(observed.begin(), observed.end(), std::uint64_t{0});
    if (total < 100 * n) throw std::domain_error("g_test needs at least 100 samples per bucket");

    GofResult result;
    result.kind = GofKind::g_test;
    result.statistic = g_statistic(observed);
    result.degrees_of_freedom = n - 1;
    result.sample_size = total;
    result.p_value = chi_square_survival(result.statistic, static_cast<double>(n - 1));
    return result;
}

double ks_statistic(std::span<const std::uint64_t> buckets, std::uint64_t n) {
    if (buckets.empty()) throw std::domain_error("ks_statistic needs a non-empty sample");
    if (n < 1) throw std::domain_error("ks_statistic needs n >= 1");
    std::vector<std::uint64_t> sorted(buckets.size());
    std::transform(buckets.begin(), buckets.end(), sorted.begin(),
                   [n](std::uint64_t b) { return b % n; });
    std::sort(sorted.begin(), sorted.end());

    const double size = static_cast<double>(sorted.size());
    const double nd = static_cast<double>(n);
    double d = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const double x = (static_cast<double>(sorted[i]) + 1.0) / nd;
        const double below = static_cast<double>(i) / size;
        const double above = static_cast<double>(i + 1) / size;
        d = std::max({d, above - x, x - below});
    }
    return d;
}

GofResult ks_test(std::span<const std::uint64_t> buckets, std::uint64_t n) {
    if (buckets.empty()) throw std::domain_error("ks_test needs a non-empty sample");
    if (n < 2) throw std::domain_error("ks_test needs n >= 2");

    GofResult result;
    result.kind = GofKind::ks_test;
    result.statistic = ks_statistic(buckets, n);
    result.sample_size = buckets.size();
    result.p_value =
        kolmogorov_survival(std::sqrt(static_cast<double>(buckets.size())) * result.statistic);
    return result;
}

}  // namespace jumpback
