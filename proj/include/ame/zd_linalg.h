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

#ifndef AME_ZD_LINALG_H
#define AME_ZD_LINALG_H

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace ame {

using Integer = boost::multiprecision::cpp_int;
using Residue = std::int64_t;

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
   public:
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries);
    /// Row-by-row literal, e.g. IntMatrix::from_rows({{3, 5}, {2, 4}}).
    static IntMatrix from_rows(const std::vector<std::vector<long long>> &rows);
    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Integer &operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Integer &operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    IntMatrix operator*(const IntMatrix &other) const;
    bool operator==(const IntMatrix &other) const = default;

    bool is_diagonal() const;

   private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Integer> entries_;
};

/// Vector over Z_d with every entry reduced into [0, d).
class ZdVector {
   public:
    ZdVector(Residue modulus, std::size_t size);
    /// Reduces each entry mod `modulus` (negative values included).
    ZdVector(Residue modulus, std::span<const Residue> values);
    ZdVector(Residue modulus, std::initializer_list<Residue> values);

    Residue modulus() const { return modulus_; }
    std::size_t size() const { return entries_.size(); }
    Residue operator[](std::size_t i) const { return entries_[i]; }
    void set(std::size_t i, Residue value);
    std::span<const Residue> entries() const { return entries_; }

    bool is_zero() const;
    bool operator==(const ZdVector &other) const = default;

   private:
    Residue modulus_;
    std::vector<Residue> entries_;
};

/// Least nonnegative residue of `x` mod `d`.
Residue reduce_mod(const Integer &x, Residue d);
Residue reduce_mod(std::int64_t x, Residue d);

/// Exact determinant over Z by fraction-free (Bareiss) elimination.
Integer det_int(const IntMatrix &m);

/// True iff gcd(x mod d, d) == 1.
bool is_unit(const Integer &x, Residue d);

/// U * M * V = S, S diagonal with s_i | s_{i+1}, U and V unimodular.
struct SmithForm {
    IntMatrix u;
    IntMatrix s;
    IntMatrix v;
};

SmithForm smith_normal_form(const IntMatrix &m);

/// Nonzero x with M x == 0 (mod d), or nullopt when det M is a unit mod d.
///
/// From U M V = diag(s_1..s_n): M x == 0 iff S y == 0 with x = V y, and
/// s_i y_i == 0 (mod d) iff y_i is a multiple of t_i = d / gcd(s_i, d).
/// Column i with t_i < d yields the generator V (t_i e_i); the first one
/// in column order is returned.
std::optional<ZdVector> kernel_nonzero(const IntMatrix &m, Residue d);

/// M x reduced mod the modulus of x.
ZdVector mul_mod(const IntMatrix &m, const ZdVector &x);

}  // namespace ame

#endif
