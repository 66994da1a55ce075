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

#include <map>
#include <set>

#include "ame/errors.h"
#include "gtest/gtest.h"

using namespace ame;

TEST(from_edge_list, four_cycle) {
    Multigraph g = from_edge_list(4, 2, {{1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {4, 1, 1}});
    EXPECT_EQ(g, cycle_graph(4, 2));
    EXPECT_EQ(g.edge(1, 2), 1);
    EXPECT_EQ(g.edge(1, 4), 1);
    EXPECT_EQ(g.edge(1, 3), 0);
    EXPECT_EQ(g.edge(4, 3), 1);
}

TEST(from_edge_list, multiplicity_reduced_mod_d) {
    EXPECT_EQ(from_edge_list(4, 3, {{1, 2, 4}}).edge(1, 2), 1);
    EXPECT_EQ(from_edge_list(2, 6, {{1, 2, 6}}), Multigraph(2, 6));
    // Repeated edges accumulate.
    EXPECT_EQ(from_edge_list(3, 5, {{1, 2, 3}, {2, 1, 4}}).edge(1, 2), 2);
}

TEST(from_edge_list, validation) {
    try {
        from_edge_list(3, 2, {{2, 2, 1}});
        FAIL();
    } catch (const ValidationError &e) {
        EXPECT_EQ(e.kind, ValidationKind::SelfLoop);
    }
    try {
        from_edge_list(3, 2, {{1, 4, 1}});
        FAIL();
    } catch (const ValidationError &e) {
        EXPECT_EQ(e.kind, ValidationKind::VertexOutOfRange);
    }
    EXPECT_THROW(from_edge_list(3, 2, {{0, 1, 1}}), ValidationError);
}

TEST(multigraph, constructor_invariants) {
    EXPECT_THROW(Multigraph(2, 2, {0, 1, 0, 0}), ValidationError);
    EXPECT_THROW(Multigraph(2, 2, {1, 0, 0, 0}), ValidationError);
    EXPECT_THROW(Multigraph(2, 2, {0, 2, 2, 0}), ValidationError);
    EXPECT_THROW(Multigraph(2, 2, {0, 1, 1}), ValidationError);
    EXPECT_THROW(Multigraph(2, 1), ValidationError);
}

TEST(enumerate_graphs, counts_and_distinctness) {
    for (auto [n, d, expected] : std::vector<std::tuple<std::size_t, Residue, std::uint64_t>>{
             {1, 2, 1}, {2, 2, 2}, {4, 2, 64}, {3, 3, 27}, {4, 6, 46656}}) {
        EXPECT_EQ(graph_count(n, d), expected);
        GraphEnumerator it(n, d);
        Multigraph g(n, d);
        std::set<std::vector<Residue>> seen;
        std::uint64_t count = 0;
        while (it.next(g)) {
            seen.emplace(g.adjacency().begin(), g.adjacency().end());
            count++;
        }
        EXPECT_EQ(count, expected);
        EXPECT_EQ(seen.size(), expected);
    }
}

TEST(enumerate_graphs, two_vertices_d2_is_empty_then_edge) {
    GraphEnumerator it(2, 2);
    Multigraph g(2, 2);
    ASSERT_TRUE(it.next(g));
    EXPECT_EQ(g, Multigraph(2, 2));
    ASSERT_TRUE(it.next(g));
    EXPECT_EQ(g, from_edge_list(2, 2, {{1, 2, 1}}));
    EXPECT_FALSE(it.next(g));
}

TEST(enumerate_graphs, lexicographic_and_range_split) {
    // Index 1 sets only the last pair (n-1, n); index d^(pairs-1) only (1,2).
    EXPECT_EQ(graph_at_index(4, 3, 1), from_edge_list(4, 3, {{3, 4, 1}}));
    EXPECT_EQ(graph_at_index(4, 3, 243), from_edge_list(4, 3, {{1, 2, 1}}));

    std::vector<Multigraph> whole;
    GraphEnumerator all(4, 3);
    Multigraph g(4, 3);
    while (all.next(g)) {
        whole.push_back(g);
    }
    std::vector<Multigraph> pieces;
    for (std::uint64_t begin : {0, 100, 400}) {
        GraphEnumerator part(4, 3, begin, begin == 400 ? 729 : (begin == 0 ? 100 : 400));
        while (part.next(g)) {
            pieces.push_back(g);
        }
    }
    EXPECT_EQ(whole, pieces);
    for (std::uint64_t i : {0, 5, 300, 728}) {
        EXPECT_EQ(graph_at_index(4, 3, i), whole[i]);
    }
}

TEST(random_graph, deterministic_and_single_vertex) {
    EXPECT_EQ(random_graph(6, 5, 42), random_graph(6, 5, 42));
    EXPECT_NE(random_graph(6, 5, 42), random_graph(6, 5, 43));
    EXPECT_EQ(random_graph(1, 2, 9), Multigraph(1, 2));
}

TEST(random_graph, covers_all_64_graphs_on_4_vertices) {
    std::map<std::vector<Residue>, int> hits;
    const int samples = 1000;
    for (int seed = 0; seed < samples; seed++) {
        Multigraph g = random_graph(4, 2, static_cast<std::uint64_t>(seed));
        hits[{g.adjacency().begin(), g.adjacency().end()}]++;
    }
    EXPECT_EQ(hits.size(), 64u);
    // Chi-square with 63 degrees of freedom has mean 63 and sd ~11.2.
    double expected = samples / 64.0;
    double chi2 = 0;
    for (const auto &[adj, count] : hits) {
        chi2 += (count - expected) * (count - expected) / expected;
    }
    EXPECT_LT(chi2, 150.0);
}

TEST(parse_graph, examples) {
    EXPECT_EQ(parse_graph(R"({"n":2,"d":2,"adjacency":[[0,1],[1,0]]})"), from_edge_list(2, 2, {{1, 2, 1}}));
    auto kind_of = [](const std::string &text) {
        try {
            parse_graph(text);
        } catch (const ValidationError &e) {
            return e.kind;
        }
        ADD_FAILURE() << "accepted " << text;
        return ValidationKind::MalformedInput;
    };
    EXPECT_EQ(kind_of(R"({"n":2,"d":2,"adjacency":[[0,1],[0,0]]})"), ValidationKind::Asymmetric);
    EXPECT_EQ(kind_of(R"({"n":2,"d":2,"adjacency":[[1,0],[0,0]]})"), ValidationKind::NonzeroDiagonal);
    EXPECT_EQ(kind_of(R"({"n":2,"d":2,"adjacency":[[0,2],[2,0]]})"), ValidationKind::OutOfRange);
    EXPECT_EQ(kind_of(R"({"n":2,"d":2,"adjacency":[[0,1],[1,0]])"), ValidationKind::MalformedInput);
    EXPECT_EQ(kind_of(R"({"n":3,"d":2,"adjacency":[[0,1],[1,0]]})"), ValidationKind::Shape);
    EXPECT_EQ(kind_of(R"({"n":2,"adjacency":[[0,1],[1,0]]})"), ValidationKind::MalformedInput);
}

TEST(parse_graph, round_trip_on_random_graphs) {
    for (std::uint64_t seed = 0; seed < 200; seed++) {
        Multigraph g = random_graph(1 + seed % 7, 2 + static_cast<Residue>(seed % 5), seed);
        ASSERT_EQ(parse_graph(serialize_graph(g)), g);
        ASSERT_EQ(parse_graph_any(serialize_graph(g)), g);
    }
}

TEST(parse_edge_list_text, format_and_sniffing) {
    std::string text = "# pentagon\n5 2\n1 2 1\n2 3 1\n3 4 1\n4 5 1\n5 1 3\n";
    EXPECT_EQ(parse_edge_list_text(text), cycle_graph(5, 2));
    EXPECT_EQ(parse_graph_any(text), cycle_graph(5, 2));
    EXPECT_THROW(parse_edge_list_text(""), ValidationError);
    EXPECT_THROW(parse_edge_list_text("3 2\n1 2\n"), ValidationError);
    EXPECT_THROW(parse_edge_list_text("3 2\n1 x 1\n"), ValidationError);
    EXPECT_THROW(parse_edge_list_text("3 2\n1 1 1\n"), ValidationError);
}

TEST(multigraph, relabeling_preserves_structure) {
    Multigraph g = from_edge_list(4, 5, {{1, 2, 3}, {2, 4, 1}});
    std::vector<std::size_t> perm{3, 2, 1, 0};
    Multigraph h = g.relabeled(perm);
    EXPECT_EQ(h.edge(4, 3), 3);
    EXPECT_EQ(h.edge(3, 1), 1);
    EXPECT_EQ(h.relabeled(perm), g);
}
