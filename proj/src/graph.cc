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

#include "ame/graph.h"

#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <limits>
#include <random>
#include <sstream>

#include "ame/errors.h"

namespace ame {

const char *to_string(ValidationKind kind) {
    switch (kind) {
        case ValidationKind::MalformedInput:
            return "malformed input";
        case ValidationKind::Shape:
            return "shape mismatch";
        case ValidationKind::Asymmetric:
            return "asymmetric adjacency";
        case ValidationKind::NonzeroDiagonal:
            return "nonzero diagonal";
        case ValidationKind::OutOfRange:
            return "entry out of range";
        case ValidationKind::SelfLoop:
            return "self-loop";
        case ValidationKind::VertexOutOfRange:
            return "vertex out of range";
    }
    return "validation error";
}

Multigraph::Multigraph(std::size_t n, Residue d, std::vector<Residue> adjacency_row_major)
    : n_(n), d_(d), adjacency_(std::move(adjacency_row_major)) {
    if (n == 0) {
        throw ValidationError(ValidationKind::Shape, "graph needs at least one vertex");
    }
    if (d < 2) {
        throw ValidationError(ValidationKind::OutOfRange, "local dimension must be at least 2");
    }
    if (adjacency_.size() != n * n) {
        throw ValidationError(ValidationKind::Shape, "adjacency must be n x n");
    }
    for (Residue e : adjacency_) {
        if (e < 0 || e >= d) {
            throw ValidationError(ValidationKind::OutOfRange, "adjacency entries must lie in [0, d)");
        }
    }
    for (std::size_t i = 0; i < n; i++) {
        if (at(i, i) != 0) {
            throw ValidationError(
                ValidationKind::NonzeroDiagonal, "vertex " + std::to_string(i + 1) + " has a loop");
        }
    }
    for (std::size_t i = 0; i < n; i++) {
        for (std::size_t j = i + 1; j < n; j++) {
            if (at(i, j) != at(j, i)) {
                throw ValidationError(
                    ValidationKind::Asymmetric,
                    "entries (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") differ");
            }
        }
    }
}

Multigraph::Multigraph(std::size_t n, Residue d) : Multigraph(n, d, std::vector<Residue>(n * n, 0)) {}

Multigraph Multigraph::relabeled(std::span<const std::size_t> perm) const {
    if (perm.size() != n_) {
        throw DimensionError("permutation length must equal vertex count");
    }
    std::vector<Residue> adj(n_ * n_, 0);
    for (std::size_t i = 0; i < n_; i++) {
        for (std::size_t j = 0; j < n_; j++) {
            adj[perm[i] * n_ + perm[j]] = at(i, j);
        }
    }
    return Multigraph(n_, d_, std::move(adj));
}

Multigraph from_edge_list(std::size_t n, Residue d, const std::vector<Edge> &edges) {
    if (d < 2) {
        throw ValidationError(ValidationKind::OutOfRange, "local dimension must be at least 2");
    }
    std::vector<Residue> adj(n * n, 0);
    for (const Edge &e : edges) {
        if (e.i < 1 || e.i > n || e.j < 1 || e.j > n) {
            throw ValidationError(
                ValidationKind::VertexOutOfRange,
                "edge (" + std::to_string(e.i) + "," + std::to_string(e.j) + ") outside 1.." + std::to_string(n));
        }
        if (e.i == e.j) {
            throw ValidationError(ValidationKind::SelfLoop, "edge at vertex " + std::to_string(e.i));
        }
        if (e.multiplicity < 0) {
            throw ValidationError(ValidationKind::OutOfRange, "negative edge multiplicity");
        }
        std::size_t a = e.i - 1;
        std::size_t b = e.j - 1;
        Residue v = reduce_mod(adj[a * n + b] + reduce_mod(e.multiplicity, d), d);
        adj[a * n + b] = v;
        adj[b * n + a] = v;
    }
    return Multigraph(n, d, std::move(adj));
}

std::uint64_t graph_count(std::size_t n, Residue d) {
    std::uint64_t pairs = n * (n - 1) / 2;
    std::uint64_t count = 1;
    for (std::uint64_t p = 0; p < pairs; p++) {
        if (count > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(d)) {
            throw ResourceError("graph count overflows 64 bits");
        }
        count *= static_cast<std::uint64_t>(d);
    }
    return count;
}

namespace {

Multigraph from_upper_triangle(std::size_t n, Residue d, std::span<const Residue> digits) {
    std::vector<Residue> adj(n * n, 0);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; i++) {
        for (std::size_t j = i + 1; j < n; j++) {
            adj[i * n + j] = digits[k];
            adj[j * n + i] = digits[k];
            k++;
        }
    }
    return Multigraph(n, d, std::move(adj));
}

std::vector<Residue> index_digits(std::size_t n, Residue d, std::uint64_t index) {
    std::vector<Residue> digits(n * (n - 1) / 2, 0);
    for (std::size_t k = digits.size(); k-- > 0;) {
        digits[k] = static_cast<Residue>(index % static_cast<std::uint64_t>(d));
        index /= static_cast<std::uint64_t>(d);
    }
    return digits;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Rejection sampling keeps the draw exact and independent of the standard
// library's distribution implementation.
Residue uniform_below(std::mt19937_64 &rng, Residue d) {
    auto bound = static_cast<std::uint64_t>(d);
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return static_cast<Residue>(x % bound);
}

}  // namespace

Multigraph graph_at_index(std::size_t n, Residue d, std::uint64_t index) {
    if (index >= graph_count(n, d)) {
        throw DomainError("graph index out of range");
    }
    return from_upper_triangle(n, d, index_digits(n, d, index));
}

GraphEnumerator::GraphEnumerator(std::size_t n, Residue d) : GraphEnumerator(n, d, 0, graph_count(n, d)) {}

GraphEnumerator::GraphEnumerator(std::size_t n, Residue d, std::uint64_t begin, std::uint64_t end)
    : n_(n), d_(d), position_(begin), end_(std::min(end, graph_count(n, d))) {
    if (n == 0 || d < 2) {
        throw DomainError("enumeration needs n >= 1 and d >= 2");
    }
}

bool GraphEnumerator::next(Multigraph &out) {
    if (position_ >= end_) {
        return false;
    }
    if (!loaded_) {
        digits_ = index_digits(n_, d_, position_);
        loaded_ = true;
    } else {
        for (std::size_t k = digits_.size(); k-- > 0;) {
            if (++digits_[k] < d_) {
                break;
            }
            digits_[k] = 0;
        }
    }
    out = from_upper_triangle(n_, d_, digits_);
    position_++;
    return true;
}

Multigraph random_graph(std::size_t n, Residue d, std::uint64_t seed) {
    if (n == 0 || d < 2) {
        throw DomainError("random_graph needs n >= 1 and d >= 2");
    }
    std::mt19937_64 rng(seed);
    std::vector<Residue> digits(n * (n - 1) / 2);
    for (Residue &digit : digits) {
        digit = uniform_below(rng, d);
    }
    return from_upper_triangle(n, d, digits);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    return splitmix64(splitmix64(seed) ^ index);
}

Multigraph parse_graph(const std::string &json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error &e) {
        throw ValidationError(ValidationKind::MalformedInput, e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("d") || !doc.contains("adjacency")) {
        throw ValidationError(ValidationKind::MalformedInput, R"(expected object with "n", "d", "adjacency")");
    }
    if (!doc["n"].is_number_integer() || !doc["d"].is_number_integer()) {
        throw ValidationError(ValidationKind::MalformedInput, R"("n" and "d" must be integers)");
    }
    auto n = doc["n"].get<std::int64_t>();
    auto d = doc["d"].get<std::int64_t>();
    if (n < 1) {
        throw ValidationError(ValidationKind::Shape, "n must be positive");
    }
    const auto &rows = doc["adjacency"];
    if (!rows.is_array() || rows.size() != static_cast<std::size_t>(n)) {
        throw ValidationError(ValidationKind::Shape, "adjacency must have n rows");
    }
    std::vector<Residue> adj;
    adj.reserve(static_cast<std::size_t>(n * n));
    for (const auto &row : rows) {
        if (!row.is_array() || row.size() != static_cast<std::size_t>(n)) {
            throw ValidationError(ValidationKind::Shape, "adjacency rows must have n entries");
        }
        for (const auto &entry : row) {
            if (!entry.is_number_integer()) {
                throw ValidationError(ValidationKind::MalformedInput, "adjacency entries must be integers");
            }
            adj.push_back(entry.get<std::int64_t>());
        }
    }
    return Multigraph(static_cast<std::size_t>(n), d, std::move(adj));
}

std::string serialize_graph(const Multigraph &g) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < g.n(); i++) {
        auto r = g.row(i);
        rows.push_back(std::vector<Residue>(r.begin(), r.end()));
    }
    nlohmann::json doc;
    doc["n"] = g.n();
    doc["d"] = g.d();
    doc["adjacency"] = std::move(rows);
    return doc.dump();
}

Multigraph parse_edge_list_text(const std::string &text) {
    std::istringstream in(text);
    std::string line;
    bool have_header = false;
    std::int64_t n = 0;
    std::int64_t d = 0;
    std::vector<Edge> edges;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        line_no++;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream fields(line);
        std::vector<std::int64_t> values;
        std::int64_t v;
        while (fields >> v) {
            values.push_back(v);
        }
        if (!fields.eof()) {
            throw ValidationError(
                ValidationKind::MalformedInput, "non-integer token on line " + std::to_string(line_no));
        }
        if (values.empty()) {
            continue;
        }
        if (!have_header) {
            if (values.size() != 2) {
                throw ValidationError(ValidationKind::MalformedInput, "header must be \"n d\"");
            }
            n = values[0];
            d = values[1];
            if (n < 1) {
                throw ValidationError(ValidationKind::Shape, "n must be positive");
            }
            have_header = true;
            continue;
        }
        if (values.size() != 3) {
            throw ValidationError(
                ValidationKind::MalformedInput, "expected \"i j multiplicity\" on line " + std::to_string(line_no));
        }
        if (values[0] < 1 || values[1] < 1) {
            throw ValidationError(ValidationKind::VertexOutOfRange, "vertices are 1-based");
        }
        edges.push_back(Edge{static_cast<std::size_t>(values[0]), static_cast<std::size_t>(values[1]), values[2]});
    }
    if (!have_header) {
        throw ValidationError(ValidationKind::MalformedInput, "empty edge list");
    }
    return from_edge_list(static_cast<std::size_t>(n), d, edges);
}

Multigraph parse_graph_any(const std::string &text) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        return parse_graph(text);
    }
    return parse_edge_list_text(text);
}

Multigraph load_graph(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open graph file: " + path);
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_graph_any(buffer.str());
}

Multigraph cycle_graph(std::size_t n, Residue d) {
    std::vector<Edge> edges;
    for (std::size_t i = 1; i <= n && n >= 3; i++) {
        edges.push_back(Edge{i, i % n + 1, 1});
    }
    if (n == 2) {
        edges.push_back(Edge{1, 2, 1});
    }
    return from_edge_list(n, d, edges);
}

Multigraph complete_graph(std::size_t n, Residue d) {
    std::vector<Edge> edges;
    for (std::size_t i = 1; i <= n; i++) {
        for (std::size_t j = i + 1; j <= n; j++) {
            edges.push_back(Edge{i, j, 1});
        }
    }
    return from_edge_list(n, d, edges);
}

}  // namespace ame
