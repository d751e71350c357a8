// Copyright 2026 The qhe-iqp Authors
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

#include "verification/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qhe {

namespace {

double gaussian(Rng &rng) {
    // Box-Muller on the raw uniform stream keeps seeds portable.
    double u1 = rng.uniform();
    while (u1 <= 0.0) {
        u1 = rng.uniform();
    }
    const double u2 = rng.uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::vector<int> distinct_qubits(int n, int count, Rng &rng) {
    std::vector<int> pool(static_cast<std::size_t>(n));
    for (int q = 0; q < n; ++q) {
        pool[static_cast<std::size_t>(q)] = q;
    }
    for (int i = 0; i < count; ++i) {
        const auto j = static_cast<std::size_t>(i) + rng.next() % static_cast<std::uint64_t>(n - i);
        std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
    }
    pool.resize(static_cast<std::size_t>(count));
    return pool;
}

}  // namespace

DensityMatrix random_xy_qubit(Rng &rng) {
    const double radius = std::sqrt(rng.uniform());
    const double angle = 2.0 * std::numbers::pi * rng.uniform();
    return states::from_bloch(radius * std::cos(angle), radius * std::sin(angle), 0.0);
}

DensityMatrix random_non_xy_qubit(Rng &rng) {
    const double z = (0.05 + 0.95 * rng.uniform()) * (rng.next() & 1U ? 1.0 : -1.0);
    const double radius = std::sqrt(1.0 - z * z) * rng.uniform();
    const double angle = 2.0 * std::numbers::pi * rng.uniform();
    return states::from_bloch(radius * std::cos(angle), radius * std::sin(angle), z);
}

DensityMatrix random_xy_product(int n, Rng &rng) {
    std::vector<DensityMatrix> factors;
    for (int q = 0; q < n; ++q) {
        factors.push_back(random_xy_qubit(rng));
    }
    return DensityMatrix::product(factors);
}

DensityMatrix random_xy_mixture(int n, Rng &rng) {
    const int parts = 1 + static_cast<int>(rng.next() % 3);
    std::vector<double> weights(static_cast<std::size_t>(parts));
    double total = 0;
    for (auto &w : weights) {
        w = 0.1 + rng.uniform();
        total += w;
    }
    const auto dim = static_cast<Eigen::Index>(dimension_of(n));
    ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
    for (double w : weights) {
        m += (w / total) * random_xy_product(n, rng).matrix();
    }
    return DensityMatrix(std::move(m), DensityMatrix::Check::kSkip);
}

DensityMatrix random_density_matrix(int n, Rng &rng) {
    const auto dim = static_cast<Eigen::Index>(dimension_of(n));
    ComplexMatrix g(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        for (Eigen::Index j = 0; j < dim; ++j) {
            g(i, j) = Complex(gaussian(rng), gaussian(rng));
        }
    }
    ComplexMatrix rho = g * g.adjoint();
    rho /= rho.trace().real();
    rho = (rho + rho.adjoint()).eval() * 0.5;
    return DensityMatrix(std::move(rho), DensityMatrix::Check::kSkip);
}

IqpCircuit random_iqp_circuit(int n, int max_gates, Rng &rng) {
    static const char *kOneQubit[] = {"Z", "S", "T"};
    static const char *kTwoQubit[] = {"CZ", "CS"};
    const int count = static_cast<int>(rng.next() % static_cast<std::uint64_t>(max_gates + 1));
    std::vector<DiagonalGate> gates;
    for (int i = 0; i < count; ++i) {
        const int kind = static_cast<int>(rng.next() % 4);
        if (kind == 3) {
            const int arity = 1 + static_cast<int>(rng.next() % static_cast<std::uint64_t>(std::min(n, 3)));
            std::vector<Complex> phases(std::size_t{1} << arity);
            for (auto &p : phases) {
                p = std::polar(1.0, 2.0 * std::numbers::pi * rng.uniform());
            }
            gates.emplace_back(distinct_qubits(n, arity, rng), std::move(phases));
            continue;
        }
        const int arity = std::min(n, kind + 1);
        const auto support = distinct_qubits(n, arity, rng);
        if (arity == 1) {
            gates.push_back(DiagonalGate::named(kOneQubit[rng.next() % 3], support));
        } else if (arity == 2) {
            gates.push_back(DiagonalGate::named(kTwoQubit[rng.next() % 2], support));
        } else {
            gates.push_back(DiagonalGate::ccz(support[0], support[1], support[2]));
        }
    }
    std::vector<int> measured;
    for (int q = 0; q < n; ++q) {
        if (rng.next() & 1U) {
            measured.push_back(q);
        }
    }
    return IqpCircuit(n, std::move(gates), std::move(measured));
}

}  // namespace qhe
