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

#include <sstream>

#include "ame/errors.h"

namespace ame {

SymplecticPauli::SymplecticPauli(ZdVector x, ZdVector z) : x_(std::move(x)), z_(std::move(z)) {
    if (x_.size() != z_.size() || x_.modulus() != z_.modulus()) {
        throw DimensionError("x and z parts must share length and modulus");
    }
}

SymplecticPauli SymplecticPauli::identity(std::size_t n, Residue d) {
    return SymplecticPauli(ZdVector(d, n), ZdVector(d, n));
}

std::vector<std::size_t> SymplecticPauli::support() const {
    std::vector<std::size_t> sites;
    for (std::size_t i = 0; i < size(); i++) {
        if (x_[i] != 0 || z_[i] != 0) {
            sites.push_back(i + 1);
        }
    }
    return sites;
}

SymplecticPauli generator(const Multigraph &g, std::size_t vertex) {
    if (vertex < 1 || vertex > g.n()) {
        throw DomainError("vertex " + std::to_string(vertex) + " outside 1.." + std::to_string(g.n()));
    }
    ZdVector x(g.d(), g.n());
    x.set(vertex - 1, 1);
    return SymplecticPauli(std::move(x), ZdVector(g.d(), g.row(vertex - 1)));
}

SymplecticPauli element(const Multigraph &g, const ExponentVector &alpha) {
    const ZdVector &a = alpha.alpha;
    if (a.size() != g.n() || a.modulus() != g.d()) {
        throw DimensionError("exponent vector does not match graph size or modulus");
    }
    std::vector<Residue> z(g.n(), 0);
    for (std::size_t i = 0; i < g.n(); i++) {
        if (a[i] == 0) {
            continue;
        }
        auto row = g.row(i);
        for (std::size_t r = 0; r < g.n(); r++) {
            z[r] = (z[r] + row[r] * a[i]) % g.d();
        }
    }
    return SymplecticPauli(a, ZdVector(g.d(), z));
}

std::size_t weight(const SymplecticPauli &p) {
    std::size_t w = 0;
    for (std::size_t i = 0; i < p.size(); i++) {
        if (p.x()[i] != 0 || p.z()[i] != 0) {
            w++;
        }
    }
    return w;
}

std::string to_string(const SymplecticPauli &p) {
    std::ostringstream out;
    bool first = true;
    auto factor = [&](char name, std::size_t site, Residue exponent) {
        if (exponent == 0) {
            return;
        }
        if (!first) {
            out << ' ';
        }
        first = false;
        out << name << site;
        if (exponent != 1) {
            out << '^' << exponent;
        }
    };
    for (std::size_t i = 0; i < p.size(); i++) {
        factor('X', i + 1, p.x()[i]);
        factor('Z', i + 1, p.z()[i]);
    }
    return first ? "I" : out.str();
}

}  // namespace ame
