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

#ifndef AME_DENSE_ORACLE_H
#define AME_DENSE_ORACLE_H

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "ame/graph.h"
#include "ame/pauli.h"

namespace ame {

// Explicit-matrix validator, kept independent of the exponent-vector
// machinery: the state is built from the stabilizer projector and the AME
// property is checked through literal partial traces.

using Complex = std::complex<double>;

/// Largest Hilbert-space dimension d^N the oracle will materialize.
inline constexpr std::size_t kDenseDimLimit = 4096;

/// Square complex matrix on `sites` qudits of dimension d, row-major.
class DenseOperator {
   public:
    DenseOperator(std::size_t sites, Residue d);
    static DenseOperator identity(std::size_t sites, Residue d);

    std::size_t sites() const { return sites_; }
    Residue d() const { return d_; }
    std::size_t dim() const { return dim_; }

    Complex &operator()(std::size_t r, std::size_t c) { return entries_[r * dim_ + c]; }
    const Complex &operator()(std::size_t r, std::size_t c) const { return entries_[r * dim_ + c]; }

    /// Dense product; zero entries of the left factor are skipped.
    DenseOperator operator*(const DenseOperator &other) const;
    DenseOperator scaled(Complex factor) const;

    Complex trace() const;
    double hermiticity_defect() const;

   private:
    std::size_t sites_;
    Residue d_;
    std::size_t dim_;
    std::vector<Complex> entries_;
};

struct StateVector {
    std::size_t sites;
    Residue d;
    std::vector<Complex> amplitudes;
};

/// Max-entry distance.
double max_abs_diff(const DenseOperator &a, const DenseOperator &b);

/// True iff a == c * b for some |c| = 1, entrywise within tol.
bool equal_up_to_phase(const DenseOperator &a, const DenseOperator &b, double tol);

/// omega = exp(2 pi i / d).
Complex root_of_unity(Residue d, std::int64_t power);

/// Tensor product over sites of X^{x_i} Z^{z_i}, with
/// X|j> = |j+1 mod d>, Z|j> = omega^j |j>.
DenseOperator pauli_matrix(const SymplecticPauli &p);

/// p applied to a state without materializing p.
std::vector<Complex> apply_pauli(const SymplecticPauli &p, std::span<const Complex> amplitudes);

/// |G> obtained by pushing a seeded random vector through
/// prod_i (1/d) sum_j g_i^j and normalizing.
StateVector graph_state(const Multigraph &g, std::uint64_t seed = 0x5eed);

/// Reduced density operator on the complement of `traced_sites` (1-based).
DenseOperator partial_trace(const StateVector &psi, std::span<const std::size_t> traced_sites);

/// All k-subsets of {1..n}, lexicographic.
std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t n, std::size_t k);

/// Every reduction onto floor(N/2) sites equals I / d^{floor(N/2)} within tol.
bool is_ame_dense(const Multigraph &g, double tol = 1e-9);

}  // namespace ame

#endif
