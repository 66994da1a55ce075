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

#include "ame/pauli.h"

#include <random>

#include "ame/errors.h"
#include "gtest/gtest.h"

using namespace ame;

TEST(generator, read_off_rows) {
    SymplecticPauli bare = generator(Multigraph(3, 4), 2);
    EXPECT_EQ(bare.x(), ZdVector(4, {0, 1, 0}));
    EXPECT_EQ(bare.z(), ZdVector(4, {0, 0, 0}));
    EXPECT_EQ(weight(bare), 1u);

    SymplecticPauli g1 = generator(cycle_graph(4, 2), 1);
    EXPECT_EQ(g1.x(), ZdVector(2, {1, 0, 0, 0}));
    EXPECT_EQ(g1.z(), ZdVector(2, {0, 1, 0, 1}));

    SymplecticPauli k2 = generator(from_edge_list(2, 3, {{1, 2, 2}}), 1);
    EXPECT_EQ(k2.x(), ZdVector(3, {1, 0}));
    EXPECT_EQ(k2.z(), ZdVector(3, {0, 2}));

    EXPECT_THROW(generator(Multigraph(3, 2), 0), DomainError);
    EXPECT_THROW(generator(Multigraph(3, 2), 4), DomainError);
}

TEST(element, examples) {
    Multigraph c4 = cycle_graph(4, 2);
    EXPECT_TRUE(element(c4, {ZdVector(2, 4)}).is_identity());
    for (std::size_t i = 1; i <= 4; i++) {
        ZdVector e(2, 4);
        e.set(i - 1, 1);
        EXPECT_EQ(element(c4, {e}), generator(c4, i));
    }
    SymplecticPauli p = element(c4, {ZdVector(2, {1, 0, 1, 0})});
    EXPECT_EQ(p.x(), ZdVector(2, {1, 0, 1, 0}));
    EXPECT_EQ(p.z(), ZdVector(2, {0, 0, 0, 0}));
    EXPECT_EQ(weight(p), 2u);
    EXPECT_EQ(to_string(p), "X1 X3");
}

TEST(element, shape_errors) {
    Multigraph g(3, 4);
    EXPECT_THROW(element(g, {ZdVector(4, 2)}), DimensionError);
    EXPECT_THROW(element(g, {ZdVector(3, 3)}), DimensionError);
}

TEST(element, homomorphism_and_faithfulness) {
    std::mt19937_64 rng(5);
    for (std::uint64_t seed = 0; seed < 200; seed++) {
        Residue d = 2 + static_cast<Residue>(seed % 5);
        std::size_t n = 2 + seed % 6;
        Multigraph g = random_graph(n, d, seed);
        std::uniform_int_distribution<Residue> digit(0, d - 1);
        ZdVector a(d, n);
        ZdVector b(d, n);
        ZdVector sum(d, n);
        for (std::size_t i = 0; i < n; i++) {
            a.set(i, digit(rng));
            b.set(i, digit(rng));
            sum.set(i, a[i] + b[i]);
        }
        SymplecticPauli pa = element(g, {a});
        SymplecticPauli pb = element(g, {b});
        SymplecticPauli ps = element(g, {sum});
        for (std::size_t i = 0; i < n; i++) {
            ASSERT_EQ(ps.x()[i], (pa.x()[i] + pb.x()[i]) % d);
            ASSERT_EQ(ps.z()[i], (pa.z()[i] + pb.z()[i]) % d);
        }
        ASSERT_EQ(pa.is_identity(), a.is_zero());
    }
}

TEST(weight, and_rendering) {
    EXPECT_EQ(weight(SymplecticPauli::identity(3, 5)), 0u);
    EXPECT_EQ(to_string(SymplecticPauli::identity(3, 5)), "I");
    SymplecticPauli p(ZdVector(4, {1, 0, 0}), ZdVector(4, {2, 3, 0}));
    EXPECT_EQ(weight(p), 2u);
    EXPECT_EQ(p.support(), (std::vector<std::size_t>{1, 2}));
    EXPECT_EQ(to_string(p), "X1 Z1^2 Z2^3");
    EXPECT_THROW(SymplecticPauli(ZdVector(4, 2), ZdVector(4, 3)), DimensionError);
}
