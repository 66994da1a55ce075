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

#ifndef AME_PAULI_H
#define AME_PAULI_H

#include <string>

#include "ame/graph.h"
#include "ame/zd_linalg.h"

namespace ame {

/// Phaseless generalized Pauli string X^{x_1} Z^{z_1} (x) ... (x) X^{x_N} Z^{z_N}.
///
/// Global phases are dropped on purpose. Tr(X^a Z^b) vanishes unless
/// a == b == 0 (mod d) whatever the scalar in front, so partial traces,
/// and with them the AME property, depend only on which sites carry a
/// non-identity factor.
class SymplecticPauli {
   public:
    SymplecticPauli(ZdVector x, ZdVector z);
    static SymplecticPauli identity(std::size_t n, Residue d);

    std::size_t size() const { return x_.size(); }
    Residue modulus() const { return x_.modulus(); }
    const ZdVector &x() const { return x_; }
    const ZdVector &z() const { return z_; }

    bool is_identity() const { return x_.is_zero() && z_.is_zero(); }
    /// Sites (1-based) where the factor is not the identity.
    std::vector<std::size_t> support() const;

    bool operator==(const SymplecticPauli &other) const = default;

   private:
    ZdVector x_;
    ZdVector z_;
};

/// Exponents alpha labeling the stabilizer element prod_i g_i^{alpha_i}.
struct ExponentVector {
    ZdVector alpha;

    bool operator==(const ExponentVector &other) const = default;
};

/// g_i = X_i prod_j Z_j^{Gamma_ij}; `vertex` is 1-based.
SymplecticPauli generator(const Multigraph &g, std::size_t vertex);

/// prod_i g_i^{alpha_i} up to phase: x = alpha, z = Gamma alpha (mod d).
SymplecticPauli element(const Multigraph &g, const ExponentVector &alpha);

std::size_t weight(const SymplecticPauli &p);

/// "X1 Z2^3 X4 Z4", sites 1-based, unit exponents omitted, "I" for identity.
std::string to_string(const SymplecticPauli &p);

}  // namespace ame

#endif
