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

#ifndef AME_GRAPH_H
#define AME_GRAPH_H

#include <cstdint>
#include <string>
#include <vector>

#include "ame/zd_linalg.h"

namespace ame {

struct Edge {
    std::size_t i;  // 1-based
    std::size_t j;  // 1-based
    std::int64_t multiplicity;
};

/// Undirected loop-free multigraph on vertices 1..n, with edge multiplicities
/// stored mod d. Adjacency is symmetric with a zero diagonal.
class Multigraph {
   public:
    /// Validates symmetry, zero diagonal and range; throws ValidationError.
    Multigraph(std::size_t n, Residue d, std::vector<Residue> adjacency_row_major);
    /// Edgeless graph.
    Multigraph(std::size_t n, Residue d);

    std::size_t n() const { return n_; }
    Residue d() const { return d_; }

    /// 1-based access, as in reports.
    Residue edge(std::size_t i, std::size_t j) const { return adjacency_[(i - 1) * n_ + (j - 1)]; }
    /// 0-based access.
    Residue at(std::size_t i, std::size_t j) const { return adjacency_[i * n_ + j]; }
    std::span<const Residue> row(std::size_t i) const { return {adjacency_.data() + i * n_, n_}; }
    std::span<const Residue> adjacency() const { return adjacency_; }

    /// Graph with vertex v relabeled perm[v] (0-based permutation).
    Multigraph relabeled(std::span<const std::size_t> perm) const;

    bool operator==(const Multigraph &other) const = default;

   private:
    std::size_t n_;
    Residue d_;
    std::vector<Residue> adjacency_;
};

Multigraph from_edge_list(std::size_t n, Residue d, const std::vector<Edge> &edges);

/// Number of labeled graphs, d^(n(n-1)/2). Throws ResourceError on overflow.
std::uint64_t graph_count(std::size_t n, Residue d);

/// The graph at position `index` of the lexicographic enumeration of
/// upper-triangle assignments (row-major: (1,2), (1,3), ..., (n-1,n), first
/// pair most significant).
Multigraph graph_at_index(std::size_t n, Residue d, std::uint64_t index);

/// Lexicographic stream over a half-open index range [begin, end), which lets
/// sweeps split the enumeration across workers.
class GraphEnumerator {
   public:
    GraphEnumerator(std::size_t n, Residue d);
    GraphEnumerator(std::size_t n, Residue d, std::uint64_t begin, std::uint64_t end);

    /// Returns false when the range is exhausted.
    bool next(Multigraph &out);
    std::uint64_t position() const { return position_; }

   private:
    void load();

    std::size_t n_;
    Residue d_;
    std::uint64_t position_;
    std::uint64_t end_;
    std::vector<Residue> digits_;
    bool loaded_ = false;
};

/// Uniform independent upper-triangle entries drawn from mt19937_64(seed).
Multigraph random_graph(std::size_t n, Residue d, std::uint64_t seed);

/// Derives a per-item seed so item i of a seeded batch is independent of
/// how the batch is partitioned.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// {"n":..,"d":..,"adjacency":[[..],..]}
Multigraph parse_graph(const std::string &json_text);
std::string serialize_graph(const Multigraph &g);

/// First line "n d", then one "i j multiplicity" per line. '#' starts a comment.
Multigraph parse_edge_list_text(const std::string &text);

/// Sniffs JSON (leading '{') versus edge-list text.
Multigraph parse_graph_any(const std::string &text);
Multigraph load_graph(const std::string &path);

/// Cycle 1-2-...-n-1 with unit multiplicities.
Multigraph cycle_graph(std::size_t n, Residue d);
Multigraph complete_graph(std::size_t n, Residue d);

}  // namespace ame

#endif
