// Copyright 2026 The ame-graph Authors
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

#ifndef AME_AME_VERIFIER_H
#define AME_AME_VERIFIER_H

#include <cstdint>
#include <optional>

#include "ame/graph.h"
#include "ame/pauli.h"

namespace ame {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

struct ScanOptions {
    /// Keep scanning after the first low-weight element to report the exact minimum.
    bool full_min = false;
    /// Largest d^N the scan may enumerate.
    std::uint64_t budget = kDefaultBudget;
};

struct AmeVerdict {
    bool is_ame = false;
    /// Exact minimum when `min_weight_exact`, otherwise the weight of the
    /// first low-weight element met before the early exit.
    std::size_t min_weight = 0;
    bool min_weight_exact = false;
    /// First alpha in scan order attaining `min_weight`; set iff !is_ame.
    std::optional<ExponentVector> witness_alpha;
    std::uint64_t checked_count = 0;
};

/// floor(N/2) + 1: the least weight every nontrivial stabilizer element of
/// an AME graph state must have.
std::size_t ame_weight_threshold(std::size_t n);

/// d^N, or ResourceError if it overflows 64 bits.
std::uint64_t alpha_space_size(std::size_t n, Residue d);

/// Decides AME by scanning every nonzero alpha in Z_d^N in mixed-radix
/// counting order with alpha_1 the least significant digit, so (1,0,..,0)
/// comes first. Results are identical across runs and platforms.
///
/// The graph state is AME iff Tr_Q S = 0 for every nontrivial stabilizer
/// element S and every Q with |Q| = ceil(N/2). Tr_Q of a Pauli string is
/// nonzero iff S is the identity on every site of Q, so the condition fails
/// exactly when some S has support of size <= N - ceil(N/2) = floor(N/2).
/// Hence AME iff every nonzero alpha gives weight >= floor(N/2) + 1.
AmeVerdict is_ame_bruteforce(const Multigraph &g, const ScanOptions &options = {});

struct MinWeight {
    std::size_t weight;
    ExponentVector alpha;
};

/// Exact minimum weight over nonzero alpha, with its first achiever in scan order.
MinWeight min_stabilizer_weight(const Multigraph &g, std::uint64_t budget = kDefaultBudget);

}  // namespace ame

#endif
