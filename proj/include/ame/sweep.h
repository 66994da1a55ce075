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

#ifndef AME_SWEEP_H
#define AME_SWEEP_H

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ame/ame_verifier.h"
#include "ame/graph.h"

namespace ame {

enum class SweepMode { Exhaustive, Random };

const char *to_string(SweepMode mode);

struct SweepOptions {
    std::size_t n = 4;
    Residue d = 2;
    SweepMode mode = SweepMode::Exhaustive;
    std::uint64_t seed = 0;
    /// Number of graphs in random mode; ignored when exhaustive.
    std::uint64_t count = 0;
    /// Caps both the number of graphs and the per-graph d^N scan.
    std::uint64_t budget = kDefaultBudget;
    /// Worker threads; 0 means hardware concurrency.
    std::size_t jobs = 0;
};

struct SweepReport {
    std::size_t n = 0;
    Residue d = 2;
    SweepMode mode = SweepMode::Exhaustive;
    std::uint64_t graphs_checked = 0;
    std::uint64_t ame_found = 0;
    /// Lowest enumeration (or sample) index among AME hits.
    std::optional<std::uint64_t> first_ame_index;
    std::optional<Multigraph> first_ame_graph;
    /// Witness extraction attempts that failed; only counted when N = 4k, d even.
    std::uint64_t witness_failures = 0;
    std::chrono::duration<double> elapsed{};
};

/// Runs is_ame_bruteforce on every graph of the sweep and, when N = 4k and
/// d is even, also extract_witness. Work is split into contiguous index
/// ranges, so the report does not depend on `jobs`.
SweepReport search(const SweepOptions &options);

/// The graph a sweep visits at `index`.
Multigraph sweep_graph(const SweepOptions &options, std::uint64_t index);

enum class Expectation {
    NoAme,          // gated: no AME graph may appear
    AmeExists,      // gated: at least one AME graph must appear
    Informational,  // recorded only
};

struct RegressionRow {
    std::string label;
    std::size_t n = 0;
    Residue d = 2;
    Expectation expectation = Expectation::NoAme;
    /// Provenance of the expected outcome: "theorem", "computed", "informational".
    std::string basis;
    bool passed = false;
    std::uint64_t graphs_checked = 0;
    std::uint64_t ame_found = 0;
    std::uint64_t witness_failures = 0;
    /// Dense re-verification of the first AME hit, when d^N fits the oracle.
    std::optional<bool> dense_confirmed;
    std::optional<Multigraph> example;
};

/// Fixed table of known existence and nonexistence facts for small (N, d).
std::vector<RegressionRow> regression(std::size_t jobs = 0);

/// True iff every gated row passed.
bool regression_passed(const std::vector<RegressionRow> &rows);

}  // namespace ame

#endif
