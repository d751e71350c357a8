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

#include "pauli/pauli.hpp"

#include <bit>
#include <cmath>

#include "util/error.hpp"

namespace qhe {

namespace {

const Complex kPhases[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

int parity(std::uint64_t bits) {
    return std::popcount(bits) & 1;
}

std::uint64_t full_mask(int n) {
    return n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
}

/// Converts a per-qubit mask (bit j = qubit j) to a basis-index mask
/// (qubit j at bit n-1-j).
std::uint64_t to_index_mask(std::uint64_t qubit_bits, int n) {
    std::uint64_t out = 0;
    for (int q = 0; q < n; ++q) {
        if ((qubit_bits >> q) & 1U) {
            out |= qubit_mask(q, n);
        }
    }
    return out;
}

}  // namespace

PauliOperator::PauliOperator(int n, std::uint64_t z_bits, std::uint64_t x_bits, int phase)
    : num_qubits_(n), z_bits_(z_bits), x_bits_(x_bits), phase_(((phase % 4) + 4) % 4) {
    if (n < 0 || n > kMaxQubits) {
        throw Error(ErrorCode::kDimension, "Pauli operator qubit count out of range");
    }
    if (((z_bits | x_bits) & ~full_mask(n)) != 0) {
        throw Error(ErrorCode::kInvalidArgument, "Pauli bits set beyond qubit count");
    }
}

PauliOperator PauliOperator::identity(int n) {
    return PauliOperator(n, 0, 0, 0);
}

PauliOperator PauliOperator::from_label(std::string_view label) {
    int phase = 0;
    if (!label.empty() && (label.front() == '+' || label.front() == '-')) {
        if (label.front() == '-') {
            phase += 2;
        }
        label.remove_prefix(1);
    }
    if (!label.empty() && label.front() == 'i') {
        phase += 1;
        label.remove_prefix(1);
    }
    const int n = static_cast<int>(label.size());
    if (n == 0) {
        throw Error(ErrorCode::kParse, "Pauli label has no letters");
    }
    if (n > kMaxQubits) {
        throw Error(ErrorCode::kDimension, "Pauli label too long");
    }
    std::uint64_t z = 0;
    std::uint64_t x = 0;
    for (int q = 0; q < n; ++q) {
        const std::uint64_t bit = std::uint64_t{1} << q;
        switch (label[static_cast<std::size_t>(q)]) {
            case 'I':
            case '_':
                break;
            case 'X':
                x |= bit;
                break;
            case 'Z':
                z |= bit;
                break;
            case 'Y':
                x |= bit;
                z |= bit;
                phase += 3;
                break;
            default:
                throw Error(ErrorCode::kParse, "unknown Pauli letter in '" + std::string(label) + "'");
        }
    }
    return PauliOperator(n, z, x, phase);
}

PauliOperator PauliOperator::from_matrix(const ComplexMatrix &m) {
    if (m.rows() != m.cols() || m.rows() == 0 || (m.rows() & (m.rows() - 1)) != 0) {
        throw Error(ErrorCode::kDimension, "matrix side is not a power of two");
    }
    int n = 0;
    while ((Eigen::Index{1} << n) < m.rows()) {
        ++n;
    }
    check_qubit_count(n);
    // Column 0 has its single nonzero entry at row v (as an index mask).
    Eigen::Index row = 0;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        if (std::abs(m(i, 0)) > std::abs(m(row, 0))) {
            row = i;
        }
    }
    std::uint64_t x = 0;
    for (int q = 0; q < n; ++q) {
        if (basis_bit(static_cast<std::uint64_t>(row), q, n)) {
            x |= std::uint64_t{1} << q;
        }
    }
    // Entry (v, 0) is i^c (-1)^{u.v}; read u off the diagonal pattern of
    // column e_q with v = 0 shifted.
    std::uint64_t z = 0;
    const std::uint64_t index_x = static_cast<std::uint64_t>(row);
    for (int q = 0; q < n; ++q) {
        const std::uint64_t col = qubit_mask(q, n);
        const Complex ratio = m(static_cast<Eigen::Index>(col ^ index_x), static_cast<Eigen::Index>(col)) / m(row, 0);
        if (ratio.real() < 0) {
            z |= std::uint64_t{1} << q;
        }
    }
    for (int c = 0; c < 4; ++c) {
        PauliOperator candidate(n, z, x, c);
        if ((pauli_matrix(candidate) - m).cwiseAbs().maxCoeff() < 1e-9) {
            return candidate;
        }
    }
    throw Error(ErrorCode::kInvalidArgument, "matrix is not a Pauli operator");
}

int PauliOperator::symplectic_product(const PauliOperator &other) const {
    if (num_qubits_ != other.num_qubits_) {
        throw Error(ErrorCode::kDimension, "Pauli qubit counts differ");
    }
    return parity(z_bits_ & other.x_bits_) ^ parity(x_bits_ & other.z_bits_);
}

PauliOperator PauliOperator::hermitian_representative() const {
    // (Z^u X^v)^dagger = (-1)^{u.v} Z^u X^v, so i^{3 |u & v|} fixes it.
    return PauliOperator(num_qubits_, z_bits_, x_bits_, 3 * std::popcount(z_bits_ & x_bits_));
}

PauliOperator PauliOperator::operator*(const PauliOperator &rhs) const {
    if (num_qubits_ != rhs.num_qubits_) {
        throw Error(ErrorCode::kDimension, "Pauli qubit counts differ");
    }
    // X^v1 Z^u2 = (-1)^{v1.u2} Z^u2 X^v1.
    const int sign = parity(x_bits_ & rhs.z_bits_);
    return PauliOperator(num_qubits_, z_bits_ ^ rhs.z_bits_, x_bits_ ^ rhs.x_bits_,
                         phase_ + rhs.phase_ + 2 * sign);
}

std::string PauliOperator::label() const {
    // Express relative to the Hermitian letters.
    const int hermitian_phase = hermitian_representative().phase();
    const int rel = ((phase_ - hermitian_phase) % 4 + 4) % 4;
    static const char *kPrefixes[4] = {"+", "+i", "-", "-i"};
    std::string out = kPrefixes[rel];
    for (int q = 0; q < num_qubits_; ++q) {
        const bool zq = z(q);
        const bool xq = x(q);
        out += zq ? (xq ? 'Y' : 'Z') : (xq ? 'X' : 'I');
    }
    return out;
}

ComplexMatrix pauli_matrix(const PauliOperator &p) {
    const int n = p.num_qubits();
    check_qubit_count(n);
    const auto dim = dimension_of(n);
    const std::uint64_t zi = to_index_mask(p.z_bits(), n);
    const std::uint64_t xi = to_index_mask(p.x_bits(), n);
    const Complex global = kPhases[p.phase()];
    ComplexMatrix m = ComplexMatrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    // Z^u X^v |k> = (-1)^{u.(k^v)} |k^v>.
    for (std::uint64_t k = 0; k < dim; ++k) {
        const std::uint64_t out = k ^ xi;
        m(static_cast<Eigen::Index>(out), static_cast<Eigen::Index>(k)) = parity(zi & out) ? -global : global;
    }
    return m;
}

std::vector<PauliTerm> pauli_decompose(const ComplexMatrix &op, double hermitian_tolerance) {
    const double defect = hermitian_defect(op);
    if (defect > hermitian_tolerance) {
        throw Error(ErrorCode::kInvalidArgument, "Pauli decomposition requires a Hermitian operator");
    }
    int n = 0;
    while ((Eigen::Index{1} << n) < op.rows()) {
        ++n;
    }
    check_qubit_count(n);
    const auto dim = dimension_of(n);
    std::vector<PauliTerm> terms;
    terms.reserve(dim * dim);
    for (std::uint64_t z = 0; z < dim; ++z) {
        for (std::uint64_t x = 0; x < dim; ++x) {
            const PauliOperator p = PauliOperator(n, z, x).hermitian_representative();
            const std::uint64_t zi = to_index_mask(z, n);
            const std::uint64_t xi = to_index_mask(x, n);
            // Tr(Z^u X^v rho) = sum_m (-1)^{u.(m^v)} rho[m, m^v].
            Complex acc = 0;
            for (std::uint64_t m = 0; m < dim; ++m) {
                const Complex entry = op(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m ^ xi));
                acc += parity(zi & (m ^ xi)) ? -entry : entry;
            }
            acc *= kPhases[p.phase()];
            terms.push_back({p, acc.real() / static_cast<double>(dim)});
        }
    }
    return terms;
}

ComplexMatrix pauli_reconstruct(std::span<const PauliTerm> terms, int n) {
    check_qubit_count(n);
    const auto dim = static_cast<Eigen::Index>(dimension_of(n));
    ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
    for (const auto &t : terms) {
        if (t.coefficient != 0) {
            m += t.coefficient * pauli_matrix(t.op);
        }
    }
    return m;
}

bool is_xy_state(const DensityMatrix &rho, std::span<const int> message_qubits) {
    const int n = rho.num_qubits();
    std::uint64_t message = 0;
    for (int q : message_qubits) {
        if (q < 0 || q >= n) {
            throw Error(ErrorCode::kInvalidArgument, "message qubit out of range");
        }
        message |= std::uint64_t{1} << q;
    }
    for (const auto &term : pauli_decompose(rho.matrix())) {
        if (std::abs(term.coefficient) <= kXyCoefficientTolerance) {
            continue;
        }
        const std::uint64_t bare_z = term.op.z_bits() & ~term.op.x_bits();
        if ((bare_z & message) != 0) {
            return false;
        }
    }
    return true;
}

bool is_xy_state(const DensityMatrix &rho) {
    std::vector<int> all(static_cast<std::size_t>(rho.num_qubits()));
    for (int q = 0; q < rho.num_qubits(); ++q) {
        all[static_cast<std::size_t>(q)] = q;
    }
    return is_xy_state(rho, all);
}

BlochVector bloch_vector(const DensityMatrix &rho) {
    if (rho.num_qubits() != 1) {
        throw Error(ErrorCode::kDimension, "Bloch vector requires a single-qubit state");
    }
    // Tr(X rho), Tr(Y rho), Tr(Z rho) for the 2x2 Hermitian rho.
    return {2 * rho(1, 0).real(), 2 * rho(1, 0).imag(), (rho(0, 0) - rho(1, 1)).real()};
}

}  // namespace qhe
