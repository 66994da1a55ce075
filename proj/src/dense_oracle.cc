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

#include "ame/dense_oracle.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "ame/errors.h"

namespace ame {

namespace {

std::size_t checked_dim(std::size_t sites, Residue d) {
    std::size_t dim = 1;
    for (std::size_t i = 0; i < sites; i++) {
        dim *= static_cast<std::size_t>(d);
        if (dim > kDenseDimLimit) {
            throw ResourceError("dense oracle limited to d^N <= " + std::to_string(kDenseDimLimit));
        }
    }
    return dim;
}

double max_abs(std::span<const Complex> v) {
    double m = 0;
    for (const Complex &c : v) {
        m = std::max(m, std::abs(c));
    }
    return m;
}

double norm(std::span<const Complex> v) {
    double s = 0;
    for (const Complex &c : v) {
        s += std::norm(c);
    }
    return std::sqrt(s);
}

}  // namespace

DenseOperator::DenseOperator(std::size_t sites, Residue d)
    : sites_(sites), d_(d), dim_(checked_dim(sites, d)), entries_(dim_ * dim_) {}

DenseOperator DenseOperator::identity(std::size_t sites, Residue d) {
    DenseOperator result(sites, d);
    for (std::size_t i = 0; i < result.dim_; i++) {
        result(i, i) = 1;
    }
    return result;
}

DenseOperator DenseOperator::operator*(const DenseOperator &other) const {
    if (dim_ != other.dim_) {
        throw DimensionError("operator dimensions differ");
    }
    DenseOperator result(sites_, d_);
    for (std::size_t i = 0; i < dim_; i++) {
        for (std::size_t k = 0; k < dim_; k++) {
            Complex a = (*this)(i, k);
            if (a == Complex(0)) {
                continue;
            }
            for (std::size_t j = 0; j < dim_; j++) {
                result(i, j) += a * other(k, j);
            }
        }
    }
    return result;
}

DenseOperator DenseOperator::scaled(Complex factor) const {
    DenseOperator result = *this;
    for (Complex &c : result.entries_) {
        c *= factor;
    }
    return result;
}

Complex DenseOperator::trace() const {
    Complex t = 0;
    for (std::size_t i = 0; i < dim_; i++) {
        t += (*this)(i, i);
    }
    return t;
}

double DenseOperator::hermiticity_defect() const {
    double defect = 0;
    for (std::size_t i = 0; i < dim_; i++) {
        for (std::size_t j = 0; j < dim_; j++) {
            defect = std::max(defect, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
        }
    }
    return defect;
}

double max_abs_diff(const DenseOperator &a, const DenseOperator &b) {
    if (a.dim() != b.dim()) {
        throw DimensionError("operator dimensions differ");
    }
    double m = 0;
    for (std::size_t i = 0; i < a.dim(); i++) {
        for (std::size_t j = 0; j < a.dim(); j++) {
            m = std::max(m, std::abs(a(i, j) - b(i, j)));
        }
    }
    return m;
}

bool equal_up_to_phase(const DenseOperator &a, const DenseOperator &b, double tol) {
    if (a.dim() != b.dim()) {
        return false;
    }
    // Read the phase off the largest entry of b.
    std::size_t best_i = 0;
    std::size_t best_j = 0;
    for (std::size_t i = 0; i < b.dim(); i++) {
        for (std::size_t j = 0; j < b.dim(); j++) {
            if (std::abs(b(i, j)) > std::abs(b(best_i, best_j))) {
                best_i = i;
                best_j = j;
            }
        }
    }
    if (std::abs(b(best_i, best_j)) <= tol) {
        return max_abs_diff(a, b) <= tol;
    }
    Complex phase = a(best_i, best_j) / b(best_i, best_j);
    if (std::abs(std::abs(phase) - 1.0) > tol) {
        return false;
    }
    return max_abs_diff(a, b.scaled(phase)) <= tol;
}

Complex root_of_unity(Residue d, std::int64_t power) {
    double angle = 2.0 * std::numbers::pi * static_cast<double>(reduce_mod(power, d)) / static_cast<double>(d);
    return std::polar(1.0, angle);
}

namespace {

// Column k maps to row target(k) with amplitude phase(k).
template <typename Visit>
void for_each_pauli_entry(const SymplecticPauli &p, std::size_t dim, Visit visit) {
    const std::size_t n = p.size();
    const Residue d = p.modulus();
    std::vector<Complex> omega(static_cast<std::size_t>(d));
    for (Residue j = 0; j < d; j++) {
        omega[static_cast<std::size_t>(j)] = root_of_unity(d, j);
    }
    std::vector<Residue> digits(n);
    for (std::size_t k = 0; k < dim; k++) {
        std::size_t rest = k;
        for (std::size_t s = n; s-- > 0;) {
            digits[s] = static_cast<Residue>(rest % static_cast<std::size_t>(d));
            rest /= static_cast<std::size_t>(d);
        }
        Residue phase_power = 0;
        std::size_t target = 0;
        for (std::size_t s = 0; s < n; s++) {
            phase_power = (phase_power + p.z()[s] * digits[s]) % d;
            target = target * static_cast<std::size_t>(d) + static_cast<std::size_t>((digits[s] + p.x()[s]) % d);
        }
        visit(k, target, omega[static_cast<std::size_t>(phase_power)]);
    }
}

}  // namespace

DenseOperator pauli_matrix(const SymplecticPauli &p) {
    DenseOperator m(p.size(), p.modulus());
    for_each_pauli_entry(p, m.dim(), [&](std::size_t col, std::size_t row, Complex phase) { m(row, col) = phase; });
    return m;
}

std::vector<Complex> apply_pauli(const SymplecticPauli &p, std::span<const Complex> amplitudes) {
    std::size_t dim = checked_dim(p.size(), p.modulus());
    if (amplitudes.size() != dim) {
        throw DimensionError("state dimension does not match operator");
    }
    std::vector<Complex> out(dim);
    for_each_pauli_entry(p, dim, [&](std::size_t col, std::size_t row, Complex phase) {
        out[row] = phase * amplitudes[col];
    });
    return out;
}

StateVector graph_state(const Multigraph &g, std::uint64_t seed) {
    const std::size_t dim = checked_dim(g.n(), g.d());
    std::vector<SymplecticPauli> generators;
    for (std::size_t i = 1; i <= g.n(); i++) {
        generators.push_back(generator(g, i));
    }

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss;
    constexpr int kMaxAttempts = 8;
    for (int attempt = 0; attempt < kMaxAttempts; attempt++) {
        std::vector<Complex> v(dim);
        for (Complex &c : v) {
            c = Complex(gauss(rng), gauss(rng));
        }
        for (const SymplecticPauli &gi : generators) {
            std::vector<Complex> acc(dim);
            std::vector<Complex> power = v;
            for (Residue j = 0; j < g.d(); j++) {
                for (std::size_t k = 0; k < dim; k++) {
                    acc[k] += power[k];
                }
                power = apply_pauli(gi, power);
            }
            for (std::size_t k = 0; k < dim; k++) {
                v[k] = acc[k] / static_cast<double>(g.d());
            }
        }
        double nv = norm(v);
        if (nv < 1e-9) {
            continue;
        }
        for (Complex &c : v) {
            c /= nv;
        }
        for (const SymplecticPauli &gi : generators) {
            std::vector<Complex> gv = apply_pauli(gi, v);
            for (std::size_t k = 0; k < dim; k++) {
                gv[k] -= v[k];
            }
            if (max_abs(gv) > 1e-9) {
                throw InternalError("projected state is not stabilized by every generator");
            }
        }
        return StateVector{g.n(), g.d(), std::move(v)};
    }
    throw InternalError("stabilizer projection collapsed on every random start");
}

DenseOperator partial_trace(const StateVector &psi, std::span<const std::size_t> traced_sites) {
    const std::size_t n = psi.sites;
    const auto d = static_cast<std::size_t>(psi.d);
    std::vector<bool> traced(n, false);
    for (std::size_t s : traced_sites) {
        if (s < 1 || s > n || traced[s - 1]) {
            throw DomainError("invalid site subset for partial trace");
        }
        traced[s - 1] = true;
    }
    std::size_t kept_count = n - traced_sites.size();
    DenseOperator rho(kept_count, psi.d);
    std::size_t kept_dim = rho.dim();
    std::size_t traced_dim = psi.amplitudes.size() / kept_dim;

    // Psi[a][t] with a over kept sites and t over traced sites, both in
    // increasing site order; rho = Psi Psi^dagger.
    std::vector<Complex> reshaped(psi.amplitudes.size());
    for (std::size_t idx = 0; idx < psi.amplitudes.size(); idx++) {
        std::size_t rest = idx;
        std::size_t a = 0;
        std::size_t a_scale = 1;
        std::size_t t = 0;
        std::size_t t_scale = 1;
        for (std::size_t s = n; s-- > 0;) {
            std::size_t digit = rest % d;
            rest /= d;
            if (traced[s]) {
                t += digit * t_scale;
                t_scale *= d;
            } else {
                a += digit * a_scale;
                a_scale *= d;
            }
        }
        reshaped[a * traced_dim + t] = psi.amplitudes[idx];
    }
    for (std::size_t a = 0; a < kept_dim; a++) {
        for (std::size_t b = 0; b < kept_dim; b++) {
            Complex sum = 0;
            for (std::size_t t = 0; t < traced_dim; t++) {
                sum += reshaped[a * traced_dim + t] * std::conj(reshaped[b * traced_dim + t]);
            }
            rho(a, b) = sum;
        }
    }
    return rho;
}

std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    if (k > n) {
        return out;
    }
    std::vector<std::size_t> current(k);
    for (std::size_t i = 0; i < k; i++) {
        current[i] = i + 1;
    }
    while (true) {
        out.push_back(current);
        std::size_t i = k;
        while (i > 0 && current[i - 1] == n - k + i) {
            i--;
        }
        if (i == 0) {
            return out;
        }
        current[i - 1]++;
        for (std::size_t j = i; j < k; j++) {
            current[j] = current[j - 1] + 1;
        }
    }
}

bool is_ame_dense(const Multigraph &g, double tol) {
    StateVector psi = graph_state(g);
    const std::size_t n = g.n();
    const std::size_t kept = n / 2;
    DenseOperator target = DenseOperator::identity(kept, g.d());
    target = target.scaled(1.0 / static_cast<double>(target.dim()));
    for (const auto &q : subsets_of_size(n, n - kept)) {
        if (max_abs_diff(partial_trace(psi, q), target) > tol) {
            return false;
        }
    }
    return true;
}

}  // namespace ame
