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

#ifndef AME_WITNESS_H
#define AME_WITNESS_H

#include <map>

#include "ame/graph.h"
#include "ame/pauli.h"
#include "ame/zd_linalg.h"

namespace ame {

/// Certificate that a graph state on N = 4k qudits with even d is not AME.
///
/// For j in {2k, ..., 4k}, take variables alpha_1..alpha_{2k-1}, alpha_j and
/// require (Gamma alpha)_r == 0 (mod d) on the 2k remaining sites
/// r in {2k..4k} \ {j}. Any nonzero solution gives a stabilizer element
/// supported on at most 2k = N/2 sites. Delta_j is the determinant of that
/// 2k x 2k system over Z.
struct WitnessReport {
    std::size_t k;
    /// 1-based vertex in {2k, ..., 4k}.
    std::size_t chosen_j;
    /// Delta_j for every j in {2k, ..., 4k}, exact over Z.
    std::map<std::size_t, Integer> deltas;
    /// Raw kernel vector, ordered (alpha_1, ..., alpha_{2k-1}, alpha_j).
    ZdVector kernel;
    ExponentVector alpha;
    SymplecticPauli witness;
    std::size_t witness_weight;
};

/// k with N = 4k; PreconditionError otherwise.
std::size_t quarter_size(const Multigraph &g);

/// Rows: r in {2k..4k} \ {j} increasing. Columns: Gamma_{i,r} for
/// i = 1..2k-1, then Gamma_{j,r}. Entries lifted to {0..d-1}.
IntMatrix build_system(const Multigraph &g, std::size_t j);

/// Delta_j = det(build_system(g, j)) for j = 2k..4k.
std::map<std::size_t, Integer> deltas(const Multigraph &g);

/// sum_j (-1)^j Delta_j over the supplied table.
Integer alternating_sum(const std::map<std::size_t, Integer> &delta_table);

/// The alternating sum for g. It vanishes identically: expanding each
/// Delta_j along its last column pairs Gamma_{a,b} and Gamma_{b,a} against
/// the same minor with opposite signs. A nonzero value throws
/// InvariantViolation.
Integer signed_delta_sum(const Multigraph &g);

/// Smallest j whose Delta_j is a non-unit mod d, a kernel vector of its
/// system, and the assembled witness. Requires N = 4k and even d.
///
/// Existence: the alternating sum gives sum_{even j} Delta_j =
/// sum_{odd j} Delta_j, with k+1 terms on the left and k on the right. If
/// every Delta_j were odd the two sides would differ in parity, so some
/// Delta_j is even and hence not a unit mod an even d.
WitnessReport extract_witness(const Multigraph &g);

/// Re-checks every report invariant against g; throws InvariantViolation.
void verify_witness(const Multigraph &g, const WitnessReport &report);

}  // namespace ame

#endif
