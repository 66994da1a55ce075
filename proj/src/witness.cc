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

#include "ame/witness.h"

#include <numeric>

#include "ame/errors.h"

namespace ame {

std::size_t quarter_size(const Multigraph &g) {
    if (g.n() % 4 != 0) {
        throw PreconditionError("witness construction needs N divisible by 4, got N = " + std::to_string(g.n()));
    }
    return g.n() / 4;
}

IntMatrix build_system(const Multigraph &g, std::size_t j) {
    const std::size_t k = quarter_size(g);
    if (j < 2 * k || j > 4 * k) {
        throw PreconditionError(
            "j = " + std::to_string(j) + " outside {" + std::to_string(2 * k) + ".." + std::to_string(4 * k) + "}");
    }
    const std::size_t size = 2 * k;
    IntMatrix m(size, size);
    std::size_t row = 0;
    for (std::size_t r = 2 * k; r <= 4 * k; r++) {
        if (r == j) {
            continue;
        }
        for (std::size_t i = 1; i < 2 * k; i++) {
            m(row, i - 1) = g.edge(i, r);
        }
        m(row, size - 1) = g.edge(j, r);
        row++;
    }
    return m;
}

std::map<std::size_t, Integer> deltas(const Multigraph &g) {
    const std::size_t k = quarter_size(g);
    std::map<std::size_t, Integer> table;
    for (std::size_t j = 2 * k; j <= 4 * k; j++) {
        table.emplace(j, det_int(build_system(g, j)));
    }
    return table;
}

Integer alternating_sum(const std::map<std::size_t, Integer> &delta_table) {
    Integer sum = 0;
    for (const auto &[j, delta] : delta_table) {
        if (j % 2 == 0) {
            sum += delta;
        } else {
            sum -= delta;
        }
    }
    return sum;
}

Integer signed_delta_sum(const Multigraph &g) {
    Integer sum = alternating_sum(deltas(g));
    if (sum != 0) {
        throw InvariantViolation("alternating Delta_j sum is " + sum.str() + ", expected 0");
    }
    return sum;
}

WitnessReport extract_witness(const Multigraph &g) {
    const std::size_t k = quarter_size(g);
    const Residue d = g.d();
    if (d % 2 != 0) {
        throw PreconditionError("witness construction needs even d, got d = " + std::to_string(d));
    }
    std::map<std::size_t, Integer> table = deltas(g);

    for (const auto &[j, delta] : table) {
        if (is_unit(delta, d)) {
            continue;
        }
        std::optional<ZdVector> kernel = kernel_nonzero(build_system(g, j), d);
        if (!kernel) {
            throw InvariantViolation("non-unit determinant but empty kernel at j = " + std::to_string(j));
        }
        ZdVector alpha(d, g.n());
        for (std::size_t i = 1; i < 2 * k; i++) {
            alpha.set(i - 1, (*kernel)[i - 1]);
        }
        alpha.set(j - 1, (*kernel)[2 * k - 1]);
        if (alpha.is_zero()) {
            throw InvariantViolation("assembled exponent vector is zero");
        }
        ExponentVector exponents{alpha};
        SymplecticPauli witness = element(g, exponents);
        std::size_t w = weight(witness);
        WitnessReport report{k, j, std::move(table), std::move(*kernel), std::move(exponents), std::move(witness), w};
        verify_witness(g, report);
        return report;
    }
    throw TheoremContradiction("every Delta_j is a unit mod " + std::to_string(d));
}

void verify_witness(const Multigraph &g, const WitnessReport &report) {
    const std::size_t k = quarter_size(g);
    const Residue d = g.d();
    auto fail = [](const std::string &what) { throw InvariantViolation("witness check failed: " + what); };

    if (report.k != k) {
        fail("k does not match N / 4");
    }
    if (report.chosen_j < 2 * k || report.chosen_j > 4 * k) {
        fail("chosen j outside {2k..4k}");
    }
    auto delta = report.deltas.find(report.chosen_j);
    if (delta == report.deltas.end() || std::gcd(reduce_mod(delta->second, d), d) == 1) {
        fail("Delta at chosen j is a unit");
    }
    if (report.kernel.size() != 2 * k || report.kernel.is_zero()) {
        fail("kernel vector must be nonzero of length 2k");
    }
    const ZdVector &alpha = report.alpha.alpha;
    if (alpha.size() != g.n() || alpha.modulus() != d || alpha.is_zero()) {
        fail("alpha must be a nonzero vector in Z_d^N");
    }
    auto in_block = [&](std::size_t site) { return site < 2 * k || site == report.chosen_j; };
    for (std::size_t site = 1; site <= g.n(); site++) {
        if (!in_block(site) && alpha[site - 1] != 0) {
            fail("alpha nonzero at site " + std::to_string(site));
        }
    }
    SymplecticPauli recomputed = element(g, report.alpha);
    if (!(recomputed == report.witness)) {
        fail("witness does not equal element(g, alpha)");
    }
    for (std::size_t site = 1; site <= g.n(); site++) {
        if (!in_block(site) && recomputed.z()[site - 1] != 0) {
            fail("(Gamma alpha) nonzero at site " + std::to_string(site));
        }
    }
    if (weight(recomputed) != report.witness_weight || report.witness_weight > 2 * k) {
        fail("witness weight exceeds 2k");
    }
}

}  // namespace ame
