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
#include <utility>

#include "ame/errors.h"

namespace ame {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : IntMatrix(rows, cols, std::vector<Integer>(rows * cols)) {}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows == 0 || cols == 0) {
        throw DimensionError("IntMatrix needs at least one row and one column");
    }
    if (entries_.size() != rows * cols) {
        throw DimensionError("IntMatrix entry count does not match rows * cols");
    }
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long long>> &rows) {
    if (rows.empty()) {
        throw DimensionError("IntMatrix needs at least one row");
    }
    std::size_t cols = rows.front().size();
    std::vector<Integer> entries;
    entries.reserve(rows.size() * cols);
    for (const auto &row : rows) {
        if (row.size() != cols) {
            throw DimensionError("ragged IntMatrix literal");
        }
        for (long long v : row) {
            entries.emplace_back(v);
        }
    }
    return IntMatrix(rows.size(), cols, std::move(entries));
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix result(n, n);
    for (std::size_t i = 0; i < n; i++) {
        result(i, i) = 1;
    }
    return result;
}

IntMatrix IntMatrix::operator*(const IntMatrix &other) const {
    if (cols_ != other.rows_) {
        throw DimensionError("IntMatrix product shape mismatch");
    }
    IntMatrix result(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; i++) {
        for (std::size_t k = 0; k < cols_; k++) {
            const Integer &a = (*this)(i, k);
            if (a == 0) {
                continue;
            }
            for (std::size_t j = 0; j < other.cols_; j++) {
                result(i, j) += a * other(k, j);
            }
        }
    }
    return result;
}

bool IntMatrix::is_diagonal() const {
    for (std::size_t r = 0; r < rows_; r++) {
        for (std::size_t c = 0; c < cols_; c++) {
            if (r != c && (*this)(r, c) != 0) {
                return false;
            }
        }
    }
    return true;
}

ZdVector::ZdVector(Residue modulus, std::size_t size) : modulus_(modulus), entries_(size, 0) {
    if (modulus < 2) {
        throw DomainError("modulus must be at least 2");
    }
}

ZdVector::ZdVector(Residue modulus, std::span<const Residue> values) : ZdVector(modulus, values.size()) {
    for (std::size_t i = 0; i < values.size(); i++) {
        entries_[i] = reduce_mod(values[i], modulus);
    }
}

ZdVector::ZdVector(Residue modulus, std::initializer_list<Residue> values)
    : ZdVector(modulus, std::span<const Residue>(values.begin(), values.size())) {}

void ZdVector::set(std::size_t i, Residue value) {
    entries_.at(i) = reduce_mod(value, modulus_);
}

bool ZdVector::is_zero() const {
    for (Residue e : entries_) {
        if (e != 0) {
            return false;
        }
    }
    return true;
}

Residue reduce_mod(const Integer &x, Residue d) {
    Integer r = x % d;
    if (r < 0) {
        r += d;
    }
    return r.convert_to<Residue>();
}

Residue reduce_mod(std::int64_t x, Residue d) {
    Residue r = x % d;
    return r < 0 ? r + d : r;
}

Integer det_int(const IntMatrix &m) {
    if (!m.is_square()) {
        throw DimensionError("determinant of a non-square matrix");
    }
    std::size_t n = m.rows();
    IntMatrix a = m;
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; k++) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) {
                p++;
            }
            if (p == n) {
                return 0;
            }
            for (std::size_t c = k; c < n; c++) {
                std::swap(a(k, c), a(p, c));
            }
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; i++) {
            for (std::size_t j = k + 1; j < n; j++) {
                // Exact by Sylvester's identity.
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

bool is_unit(const Integer &x, Residue d) {
    if (d < 2) {
        throw DomainError("modulus must be at least 2");
    }
    return std::gcd(reduce_mod(x, d), d) == 1;
}

namespace {

void swap_rows(IntMatrix &m, std::size_t a, std::size_t b) {
    if (a == b) {
        return;
    }
    for (std::size_t c = 0; c < m.cols(); c++) {
        std::swap(m(a, c), m(b, c));
    }
}

void swap_cols(IntMatrix &m, std::size_t a, std::size_t b) {
    if (a == b) {
        return;
    }
    for (std::size_t r = 0; r < m.rows(); r++) {
        std::swap(m(r, a), m(r, b));
    }
}

// row[dst] += factor * row[src]
void add_row(IntMatrix &m, std::size_t dst, std::size_t src, const Integer &factor) {
    for (std::size_t c = 0; c < m.cols(); c++) {
        m(dst, c) += factor * m(src, c);
    }
}

// col[dst] += factor * col[src]
void add_col(IntMatrix &m, std::size_t dst, std::size_t src, const Integer &factor) {
    for (std::size_t r = 0; r < m.rows(); r++) {
        m(r, dst) += factor * m(r, src);
    }
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix &m) {
    IntMatrix a = m;
    IntMatrix u = IntMatrix::identity(m.rows());
    IntMatrix v = IntMatrix::identity(m.cols());
    std::size_t rank_bound = std::min(m.rows(), m.cols());

    auto move_to_pivot = [&](std::size_t t, std::size_t r, std::size_t c) {
        swap_rows(a, t, r);
        swap_rows(u, t, r);
        swap_cols(a, t, c);
        swap_cols(v, t, c);
    };

    for (std::size_t t = 0; t < rank_bound; t++) {
        // Smallest nonzero magnitude in the trailing block becomes the pivot.
        std::optional<std::pair<std::size_t, std::size_t>> best;
        for (std::size_t r = t; r < a.rows(); r++) {
            for (std::size_t c = t; c < a.cols(); c++) {
                if (a(r, c) != 0 && (!best || abs(a(r, c)) < abs(a(best->first, best->second)))) {
                    best = {r, c};
                }
            }
        }
        if (!best) {
            break;
        }
        move_to_pivot(t, best->first, best->second);

        while (true) {
            for (std::size_t r = t + 1; r < a.rows(); r++) {
                if (a(r, t) != 0) {
                    Integer q = a(r, t) / a(t, t);
                    add_row(a, r, t, -q);
                    add_row(u, r, t, -q);
                }
            }
            for (std::size_t c = t + 1; c < a.cols(); c++) {
                if (a(t, c) != 0) {
                    Integer q = a(t, c) / a(t, t);
                    add_col(a, c, t, -q);
                    add_col(v, c, t, -q);
                }
            }

            // Nonzero remainders are strictly smaller than the pivot; swap the
            // smallest in and repeat.
            std::optional<std::pair<std::size_t, std::size_t>> rem;
            auto consider = [&](std::size_t r, std::size_t c) {
                if (a(r, c) != 0 && (!rem || abs(a(r, c)) < abs(a(rem->first, rem->second)))) {
                    rem = {r, c};
                }
            };
            for (std::size_t r = t + 1; r < a.rows(); r++) {
                consider(r, t);
            }
            for (std::size_t c = t + 1; c < a.cols(); c++) {
                consider(t, c);
            }
            if (rem) {
                move_to_pivot(t, rem->first, rem->second);
                continue;
            }

            // Pivot row and column are clear. Enforce s_t | every later entry
            // by folding an offending row into the pivot row.
            std::optional<std::size_t> offending;
            for (std::size_t r = t + 1; r < a.rows() && !offending; r++) {
                for (std::size_t c = t + 1; c < a.cols(); c++) {
                    if (a(r, c) % a(t, t) != 0) {
                        offending = r;
                        break;
                    }
                }
            }
            if (!offending) {
                break;
            }
            add_row(a, t, *offending, 1);
            add_row(u, t, *offending, 1);
        }

        if (a(t, t) < 0) {
            add_row(a, t, t, -2);
            add_row(u, t, t, -2);
        }
    }
    return SmithForm{std::move(u), std::move(a), std::move(v)};
}

std::optional<ZdVector> kernel_nonzero(const IntMatrix &m, Residue d) {
    if (!m.is_square()) {
        throw DimensionError("kernel_nonzero expects a square matrix");
    }
    if (d < 2) {
        throw DomainError("modulus must be at least 2");
    }
    SmithForm snf = smith_normal_form(m);
    std::size_t n = m.rows();
    for (std::size_t i = 0; i < n; i++) {
        Residue g = std::gcd(reduce_mod(snf.s(i, i), d), d);
        Residue step = d / g;
        if (step == d) {
            continue;
        }
        ZdVector x(d, n);
        for (std::size_t r = 0; r < n; r++) {
            x.set(r, reduce_mod(snf.v(r, i) * step, d));
        }
        if (!x.is_zero()) {
            return x;
        }
    }
    return std::nullopt;
}

ZdVector mul_mod(const IntMatrix &m, const ZdVector &x) {
    if (m.cols() != x.size()) {
        throw DimensionError("matrix-vector shape mismatch");
    }
    ZdVector result(x.modulus(), m.rows());
    for (std::size_t r = 0; r < m.rows(); r++) {
        Integer acc = 0;
        for (std::size_t c = 0; c < m.cols(); c++) {
            acc += m(r, c) * x[c];
        }
        result.set(r, reduce_mod(acc, x.modulus()));
    }
    return result;
}

}  // namespace ame
