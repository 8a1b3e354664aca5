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

#ifndef JUMPBACK_TRACE_HPP_
#define JUMPBACK_TRACE_HPP_

#include <cstdint>
#include <optional>
#include <vector>

namespace jumpback {

/// Intermediate values recorded during one traced evaluation.
///
/// Each algorithm fills only the fields it uses. For the interval-based
/// algorithms, m_list, c_list and y_list are parallel: entry i describes the
/// i-th processed interval [2^m, 2^(m+1)) and the largest active index drawn
/// from it. z_list holds every further candidate drawn inside an interval, in
/// draw order. m_list is strictly decreasing.
struct EvaluationTrace {
    std::optional<std::uint32_t> x0;
    std::optional<std::uint32_t> x1;
    std::optional<std::uint32_t> u_bits;
    std::vector<std::uint32_t> m_list;
    std::vector<std::uint32_t> c_list;
    std::vector<std::uint64_t> y_list;
    std::vector<std::uint64_t> z_list;
    // Active indices in generation order (ascending for jump hash,
    // descending for jumping backwards).
    std::vector<std::uint64_t> active_indices;
    std::optional<double> unit_uniform;
    std::optional<double> gamma;
    std::uint64_t invocations = 0;
};

}  // namespace jumpback

#endif  // JUMPBACK_TRACE_HPP_
