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

#include "ame/zd_linalg.h"

#include <numeric>
#include <random>

#include "ame/errors.h"
#include "gtest/gtest.h"

using namespace ame;

namespace {

// Independent oracle: Laplace expansion along the first row.
long long cofactor_det(const std::vector<std::vector<long long>> &m) {
    std::size_t n = m.size();
    if (n == 1) {
        return m[0][0];
    }
    long long total = 0;
    for (std::size_t c = 0; c < n; c++) {
        std::vector<std::vector<long long>> minor;
        for (std::size_t r = 1; r < n; r++) {
            std::vector<long long> row;
            for (std::size_t cc = 0; cc < n; cc++) {
                if (cc != c) {
                    row.push_back(m[r][cc]);
                }
            }
            minor.push_back(row);
        }
        total += (c % 2 == 0 ? 1 : -1) * m[0][c] * cofactor_det(minor);
    }
    return total;
}

std::vector<std::vector<long long>> random_rows(std::mt19937_64 &rng, std::size_t n, long long lo, long long hi) {
    std::uniform_int_distribution<long long> dist(lo, hi);
    std::vector<std::vector<long long>> rows(n, std::vector<long long>(n));
    for (auto &row : rows) {
        for (auto &v : row) {
            v = dist(rng);
        }
    }
    return rows;
}

bool annihilates(const IntMatrix &m, const ZdVector &x) {
    return mul_mod(m, x).is_zero();
}

}  // namespace

TEST(det_int, small_cases) {
    EXPECT_EQ(det_int(IntMatrix::identity(2)), 1);
    EXPECT_EQ(det_int(IntMatrix(2, 2)), 0);
    EXPECT_EQ(det_int(IntMatrix::from_rows({{3, 5}, {2, 4}})), 2);
    EXPECT_EQ(cofactor_det({{3, 5}, {2, 4}}), 2);
    EXPECT_EQ(det_int(IntMatrix::from_rows({{7}})), 7);
    // Needs a row swap: leading zero pivot.
    EXPECT_EQ(det_int(IntMatrix::from_rows({{0, 1}, {1, 0}})), -1);
}

TEST(det_int, non_square_is_dimension_error) {
    EXPECT_THROW(det_int(IntMatrix(2, 3)), DimensionError);
}

TEST(det_int, matches_cofactor_expansion) {
    std::mt19937_64 rng(11);
    for (std::size_t n = 1; n <= 4; n++) {
        for (int trial = 0; trial < 300; trial++) {
            auto rows = random_rows(rng, n, -9, 9);
            EXPECT_EQ(det_int(IntMatrix::from_rows(rows)), cofactor_det(rows));
        }
    }
}

TEST(det_int, large_entries_stay_exact) {
    // det = 1e18 * 1e18 - (1e18 - 1)(1e18 + 1) = 1
    IntMatrix m(2, 2);
    Integer big("1000000000000000000");
    m(0, 0) = big;
    m(0, 1) = big - 1;
    m(1, 0) = big + 1;
    m(1, 1) = big;
    EXPECT_EQ(det_int(m), 1);
}

TEST(is_unit, cases) {
    EXPECT_TRUE(is_unit(1, 6));
    EXPECT_FALSE(is_unit(3, 6));
    EXPECT_TRUE(is_unit(5, 6));
    EXPECT_TRUE(is_unit(-1, 6));
    EXPECT_FALSE(is_unit(0, 4));
    EXPECT_FALSE(is_unit(Integer(12), 6));
    EXPECT_THROW(is_unit(1, 1), DomainError);
}

TEST(smith_normal_form, identity_and_zero) {
    SmithForm id = smith_normal_form(IntMatrix::identity(3));
    EXPECT_EQ(id.s, IntMatrix::identity(3));
    EXPECT_EQ(id.u, IntMatrix::identity(3));
    EXPECT_EQ(id.v, IntMatrix::identity(3));

    SmithForm zero = smith_normal_form(IntMatrix(2, 2));
    EXPECT_EQ(zero.s, IntMatrix(2, 2));
}

TEST(smith_normal_form, diag_2_3_becomes_1_6) {
    IntMatrix m = IntMatrix::from_rows({{2, 0}, {0, 3}});
    SmithForm snf = smith_normal_form(m);
    EXPECT_EQ(snf.s, IntMatrix::from_rows({{1, 0}, {0, 6}}));
    EXPECT_EQ(snf.u * m * snf.v, snf.s);
    EXPECT_EQ(abs(det_int(snf.u)), 1);
    EXPECT_EQ(abs(det_int(snf.v)), 1);
}

TEST(smith_normal_form, random_properties) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::size_t> shape(1, 5);
    for (int trial = 0; trial < 400; trial++) {
        std::size_t rows = shape(rng);
        std::size_t cols = shape(rng);
        std::uniform_int_distribution<long long> entry(-6, 6);
        IntMatrix m(rows, cols);
        for (std::size_t r = 0; r < rows; r++) {
            for (std::size_t c = 0; c < cols; c++) {
                m(r, c) = entry(rng);
            }
        }
        SmithForm snf = smith_normal_form(m);
        ASSERT_EQ(snf.u * m * snf.v, snf.s);
        ASSERT_TRUE(snf.s.is_diagonal());
        ASSERT_EQ(abs(det_int(snf.u)), 1);
        ASSERT_EQ(abs(det_int(snf.v)), 1);
        std::size_t diag = std::min(rows, cols);
        for (std::size_t i = 0; i < diag; i++) {
            ASSERT_GE(snf.s(i, i), 0);
            if (i + 1 < diag) {
                const Integer &a = snf.s(i, i);
                const Integer &b = snf.s(i + 1, i + 1);
                ASSERT_TRUE(a == 0 ? b == 0 : b % a == 0) << a << " does not divide " << b;
            }
        }
        if (rows == cols) {
            Integer product = 1;
            for (std::size_t i = 0; i < diag; i++) {
                product *= snf.s(i, i);
            }
            ASSERT_EQ(abs(det_int(m)), product);
        }
    }
}

TEST(kernel_nonzero, examples) {
    auto x = kernel_nonzero(IntMatrix::from_rows({{2, 0}, {0, 1}}), 4);
    ASSERT_TRUE(x.has_value());
    EXPECT_EQ(*x, ZdVector(4, {2, 0}));

    EXPECT_FALSE(kernel_nonzero(IntMatrix::identity(3), 6).has_value());

    IntMatrix m = IntMatrix::from_rows({{3, 1}, {0, 2}});
    auto y = kernel_nonzero(m, 6);
    ASSERT_TRUE(y.has_value());
    EXPECT_FALSE(y->is_zero());
    EXPECT_TRUE(annihilates(m, *y));
}

TEST(kernel_nonzero, brute_force_confirms_3_1_0_2_mod_6) {
    IntMatrix m = IntMatrix::from_rows({{3, 1}, {0, 2}});
    int solutions = 0;
    for (Residue a = 0; a < 6; a++) {
        for (Residue b = 0; b < 6; b++) {
            if ((a != 0 || b != 0) && annihilates(m, ZdVector(6, {a, b}))) {
                solutions++;
            }
        }
    }
    // 3a + b == 0 and 2b == 0 mod 6: b in {0, 3}, five nonzero solutions.
    EXPECT_EQ(solutions, 5);
}

TEST(kernel_nonzero, errors) {
    EXPECT_THROW(kernel_nonzero(IntMatrix(2, 3), 4), DimensionError);
    EXPECT_THROW(kernel_nonzero(IntMatrix::identity(2), 1), DomainError);
}

TEST(kernel_nonzero, agrees_with_exhaustive_kernel_search) {
    std::mt19937_64 rng(3);
    for (Residue d : {4, 6}) {
        for (int trial = 0; trial < 150; trial++) {
            IntMatrix m = IntMatrix::from_rows(random_rows(rng, 2, 0, d - 1));
            bool exists = false;
            for (Residue a = 0; a < d && !exists; a++) {
                for (Residue b = 0; b < d && !exists; b++) {
                    exists = (a != 0 || b != 0) && annihilates(m, ZdVector(d, {a, b}));
                }
            }
            auto x = kernel_nonzero(m, d);
            ASSERT_EQ(x.has_value(), exists);
            ASSERT_EQ(exists, !is_unit(det_int(m), d));
            if (x) {
                ASSERT_TRUE(annihilates(m, *x));
            }
        }
    }
}

TEST(kernel_nonzero, deterministic) {
    IntMatrix m = IntMatrix::from_rows({{2, 4, 6}, {1, 3, 5}, {0, 2, 2}});
    EXPECT_EQ(kernel_nonzero(m, 12), kernel_nonzero(m, 12));
}

TEST(zd_vector, reduces_entries) {
    ZdVector v(5, {-1, 7, 5});
    EXPECT_EQ(v[0], 4);
    EXPECT_EQ(v[1], 2);
    EXPECT_EQ(v[2], 0);
    EXPECT_THROW(ZdVector(1, 3), DomainError);
}
