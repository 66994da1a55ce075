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

#include "ame/ame_verifier.h"

#include <limits>
#include <vector>

#include "ame/errors.h"

namespace ame {

std::size_t ame_weight_threshold(std::size_t n) {
    return n / 2 + 1;
}

std::uint64_t alpha_space_size(std::size_t n, Residue d) {
    std::uint64_t size = 1;
    for (std::size_t i = 0; i < n; i++) {
        if (size > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(d)) {
            throw ResourceError("d^N overflows 64 bits");
        }
        size *= static_cast<std::uint64_t>(d);
    }
    return size;
}

namespace {

struct ScanResult {
    std::size_t min_weight;
    std::vector<Residue> min_alpha;
    std::uint64_t checked;
};

// Mixed-radix scan of nonzero alpha, alpha_1 the fastest digit. Stops at the first element lighter
// than `stop_below` (pass 0 to scan everything).
ScanResult scan_alpha_space(const Multigraph &g, std::uint64_t budget, std::size_t stop_below) {
    const std::size_t n = g.n();
    const Residue d = g.d();
    std::uint64_t space = alpha_space_size(n, d);
    if (space > budget) {
        throw ResourceError(
            "alpha space d^N = " + std::to_string(space) + " exceeds budget " + std::to_string(budget));
    }

    std::vector<Residue> alpha(n, 0);
    // Running z = Gamma alpha (mod d). Every digit step, including a wrap
    // from d-1 back to 0, adds one copy of that row.
    std::vector<Residue> z(n, 0);
    ScanResult result{n + 1, {}, 0};

    while (true) {
        std::size_t p = 0;
        for (; p < n; p++) {
            auto row = g.row(p);
            for (std::size_t r = 0; r < n; r++) {
                z[r] += row[r];
                if (z[r] >= d) {
                    z[r] -= d;
                }
            }
            if (++alpha[p] < d) {
                break;
            }
            alpha[p] = 0;
        }
        if (p == n) {
            return result;
        }

        result.checked++;
        std::size_t w = 0;
        for (std::size_t i = 0; i < n; i++) {
            w += (alpha[i] != 0 || z[i] != 0) ? 1 : 0;
        }
        if (w < result.min_weight) {
            result.min_weight = w;
            result.min_alpha = alpha;
            if (w < stop_below) {
                return result;
            }
        }
    }
}

}  // namespace

AmeVerdict is_ame_bruteforce(const Multigraph &g, const ScanOptions &options) {
    const std::size_t threshold = ame_weight_threshold(g.n());
    ScanResult scan = scan_alpha_space(g, options.budget, options.full_min ? 0 : threshold);

    AmeVerdict verdict;
    verdict.is_ame = scan.min_weight >= threshold;
    verdict.min_weight = scan.min_weight;
    verdict.min_weight_exact = options.full_min || verdict.is_ame;
    verdict.checked_count = scan.checked;
    if (!verdict.is_ame) {
        verdict.witness_alpha = ExponentVector{ZdVector(g.d(), scan.min_alpha)};
    }
    return verdict;
}

MinWeight min_stabilizer_weight(const Multigraph &g, std::uint64_t budget) {
    ScanResult scan = scan_alpha_space(g, budget, 0);
    return MinWeight{scan.min_weight, ExponentVector{ZdVector(g.d(), scan.min_alpha)}};
}

}  // namespace ame
