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

#include "sim/gates.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <sstream>

#include "util/error.hpp"

namespace qhe {

namespace {

void check_support(const std::vector<int> &support) {
    if (support.empty() || support.size() > 3) {
        throw Error(ErrorCode::kInvalidArgument, "diagonal gate support must have 1 to 3 qubits");
    }
    for (std::size_t i = 0; i < support.size(); ++i) {
        if (support[i] < 0) {
            throw Error(ErrorCode::kInvalidArgument, "negative qubit index in gate support");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (support[i] == support[j]) {
                throw Error(ErrorCode::kInvalidArgument, "repeated qubit in gate support");
            }
        }
    }
}

std::vector<Complex> controlled_phase(std::size_t size, Complex last) {
    std::vector<Complex> phases(size, Complex{1, 0});
    phases.back() = last;
    return phases;
}

}  // namespace

DiagonalGate::DiagonalGate(std::vector<int> support, std::vector<Complex> phases)
    : DiagonalGate("DIAG", std::move(support), std::move(phases)) {
}

DiagonalGate::DiagonalGate(std::string name, std::vector<int> support, std::vector<Complex> phases)
    : name_(std::move(name)), support_(std::move(support)), phases_(std::move(phases)) {
    check_support(support_);
    if (phases_.size() != (std::size_t{1} << support_.size())) {
        throw Error(ErrorCode::kInvalidArgument, "diagonal gate needs 2^|support| phases");
    }
    for (const auto &p : phases_) {
        if (std::abs(std::abs(p) - 1.0) > kUnitModulusTolerance) {
            std::ostringstream msg;
            msg << "diagonal entry " << p << " is not unit modulus";
            throw Error(ErrorCode::kInvalidArgument, msg.str());
        }
    }
}

DiagonalGate DiagonalGate::z(int q) {
    return DiagonalGate("Z", {q}, {1.0, -1.0});
}

DiagonalGate DiagonalGate::s(int q) {
    return DiagonalGate("S", {q}, {1.0, Complex{0, 1}});
}

DiagonalGate DiagonalGate::t(int q) {
    return DiagonalGate("T", {q}, {1.0, std::polar(1.0, std::numbers::pi / 4)});
}

DiagonalGate DiagonalGate::cz(int a, int b) {
    return DiagonalGate("CZ", {a, b}, controlled_phase(4, -1.0));
}

DiagonalGate DiagonalGate::cs(int a, int b) {
    return DiagonalGate("CS", {a, b}, controlled_phase(4, Complex{0, 1}));
}

DiagonalGate DiagonalGate::ccz(int a, int b, int c) {
    return DiagonalGate("CCZ", {a, b, c}, controlled_phase(8, -1.0));
}

DiagonalGate DiagonalGate::named(const std::string &name, const std::vector<int> &support) {
    auto want = [&](std::size_t arity) {
        if (support.size() != arity) {
            throw Error(ErrorCode::kInvalidArgument,
                        "gate " + name + " takes " + std::to_string(arity) + " qubit(s)");
        }
    };
    if (name == "Z") {
        want(1);
        return z(support[0]);
    }
    if (name == "S") {
        want(1);
        return s(support[0]);
    }
    if (name == "T") {
        want(1);
        return t(support[0]);
    }
    if (name == "CZ") {
        want(2);
        return cz(support[0], support[1]);
    }
    if (name == "CS") {
        want(2);
        return cs(support[0], support[1]);
    }
    if (name == "CCZ") {
        want(3);
        return ccz(support[0], support[1], support[2]);
    }
    throw Error(ErrorCode::kInvalidArgument, "no named diagonal gate '" + name + "'");
}

Complex DiagonalGate::phase_for(std::uint64_t index, int n) const {
    std::size_t local = 0;
    for (int q : support_) {
        local = (local << 1) | static_cast<std::size_t>(basis_bit(index, q, n));
    }
    return phases_[local];
}

ComplexMatrix DiagonalGate::matrix(int n) const {
    check_qubit_count(n);
    for (int q : support_) {
        if (q >= n) {
            throw Error(ErrorCode::kInvalidArgument, "gate support outside register");
        }
    }
    const auto dim = dimension_of(n);
    ComplexMatrix m = ComplexMatrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::uint64_t i = 0; i < dim; ++i) {
        m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = phase_for(i, n);
    }
    return m;
}

DensityMatrix apply_diagonal(const DensityMatrix &rho, const DiagonalGate &gate) {
    const int n = rho.num_qubits();
    for (int q : gate.support()) {
        if (q >= n) {
            throw Error(ErrorCode::kInvalidArgument, "gate support outside register");
        }
    }
    const auto dim = rho.dim();
    std::vector<Complex> diag(dim);
    for (std::uint64_t i = 0; i < dim; ++i) {
        diag[i] = gate.phase_for(i, n);
    }
    ComplexMatrix out = rho.matrix();
    for (std::size_t j = 0; j < dim; ++j) {
        const Complex right = std::conj(diag[j]);
        for (std::size_t i = 0; i < dim; ++i) {
            out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) *= diag[i] * right;
        }
    }
    return DensityMatrix(std::move(out), DensityMatrix::Check::kSkip);
}

DensityMatrix apply_pauli(const DensityMatrix &rho, const PauliOperator &p) {
    const int n = rho.num_qubits();
    if (p.num_qubits() != n) {
        throw Error(ErrorCode::kDimension, "Pauli and state qubit counts differ");
    }
    std::uint64_t zi = 0;
    std::uint64_t xi = 0;
    for (int q = 0; q < n; ++q) {
        if (p.z(q)) {
            zi |= qubit_mask(q, n);
        }
        if (p.x(q)) {
            xi |= qubit_mask(q, n);
        }
    }
    // (P rho P^dagger)[a, b] = s(a) s(b) rho[a^v, b^v], s(a) = (-1)^{u.a};
    // the global phase i^c cancels.
    const auto dim = rho.dim();
    ComplexMatrix out(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::uint64_t b = 0; b < dim; ++b) {
        const bool sb = (std::popcount(zi & b) & 1) != 0;
        for (std::uint64_t a = 0; a < dim; ++a) {
            const bool sa = (std::popcount(zi & a) & 1) != 0;
            const Complex v = rho(a ^ xi, b ^ xi);
            out(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = (sa != sb) ? -v : v;
        }
    }
    return DensityMatrix(std::move(out), DensityMatrix::Check::kSkip);
}

DensityMatrix apply_z_pads(const DensityMatrix &rho, const std::vector<int> &pads) {
    const int n = rho.num_qubits();
    if (static_cast<int>(pads.size()) != n) {
        throw Error(ErrorCode::kDimension, "pad count differs from qubit count");
    }
    std::uint64_t z = 0;
    for (int q = 0; q < n; ++q) {
        if (pads[static_cast<std::size_t>(q)] & 1) {
            z |= std::uint64_t{1} << q;
        }
    }
    return apply_pauli(rho, PauliOperator(n, z, 0));
}

}  // namespace qhe
