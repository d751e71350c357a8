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

#include "sim/density.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "util/error.hpp"

namespace qhe {

namespace {

int qubits_for_dimension(Eigen::Index dim) {
    if (dim <= 0 || (dim & (dim - 1)) != 0) {
        throw Error(ErrorCode::kDimension, "density matrix side is not a power of two");
    }
    int n = 0;
    while ((Eigen::Index{1} << n) < dim) {
        ++n;
    }
    check_qubit_count(n);
    return n;
}

}  // namespace

DensityMatrix::DensityMatrix(ComplexMatrix matrix, Check check) : matrix_(std::move(matrix)) {
    if (matrix_.rows() != matrix_.cols()) {
        throw Error(ErrorCode::kDimension, "density matrix is not square");
    }
    num_qubits_ = qubits_for_dimension(matrix_.rows());
    if (check == Check::kFull) {
        validate();
    }
}

void DensityMatrix::validate() const {
    const double defect = hermitian_defect(matrix_);
    if (defect > kHermitianTolerance) {
        std::ostringstream msg;
        msg << "density matrix is not Hermitian (defect " << defect << ")";
        throw Error(ErrorCode::kInvalidArgument, msg.str());
    }
    const Complex tr = matrix_.trace();
    if (std::abs(tr - Complex{1.0, 0.0}) > kTraceTolerance) {
        std::ostringstream msg;
        msg << "density matrix trace is " << tr.real() << " + " << tr.imag() << "i, expected 1";
        throw Error(ErrorCode::kInvalidArgument, msg.str());
    }
    const auto eigenvalues = hermitian_eigenvalues(matrix_);
    if (eigenvalues.front() < -kPsdTolerance) {
        std::ostringstream msg;
        msg << "density matrix has negative eigenvalue " << eigenvalues.front();
        throw Error(ErrorCode::kInvalidArgument, msg.str());
    }
}

DensityMatrix DensityMatrix::from_pure(const ComplexVector &amplitudes) {
    const double norm = amplitudes.norm();
    if (norm == 0) {
        throw Error(ErrorCode::kInvalidArgument, "zero state vector");
    }
    const ComplexVector psi = amplitudes / norm;
    return DensityMatrix(psi * psi.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(int n) {
    check_qubit_count(n);
    const auto dim = static_cast<Eigen::Index>(dimension_of(n));
    return DensityMatrix(ComplexMatrix::Identity(dim, dim) / static_cast<double>(dim), Check::kSkip);
}

DensityMatrix DensityMatrix::basis_state(int n, std::uint64_t index) {
    check_qubit_count(n);
    const auto dim = static_cast<Eigen::Index>(dimension_of(n));
    if (index >= static_cast<std::uint64_t>(dim)) {
        throw Error(ErrorCode::kInvalidArgument, "basis index out of range");
    }
    ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
    m(static_cast<Eigen::Index>(index), static_cast<Eigen::Index>(index)) = 1.0;
    return DensityMatrix(std::move(m), Check::kSkip);
}

DensityMatrix DensityMatrix::product(std::span<const DensityMatrix> factors) {
    int total = 0;
    for (const auto &f : factors) {
        total += f.num_qubits();
    }
    check_qubit_count(total);
    ComplexMatrix m = ComplexMatrix::Ones(1, 1);
    for (const auto &f : factors) {
        m = kron(m, f.matrix());
    }
    return DensityMatrix(std::move(m), Check::kSkip);
}

namespace states {

DensityMatrix zero() {
    return DensityMatrix::basis_state(1, 0);
}

DensityMatrix one() {
    return DensityMatrix::basis_state(1, 1);
}

DensityMatrix plus() {
    return from_bloch(1, 0, 0);
}

DensityMatrix minus() {
    return from_bloch(-1, 0, 0);
}

DensityMatrix xy_plane(double phi) {
    ComplexVector psi(2);
    psi << 1.0, std::polar(1.0, phi);
    return DensityMatrix::from_pure(psi);
}

DensityMatrix from_bloch(double rx, double ry, double rz) {
    if (rx * rx + ry * ry + rz * rz > 1.0 + 1e-12) {
        throw Error(ErrorCode::kInvalidArgument, "Bloch vector longer than 1");
    }
    ComplexMatrix m(2, 2);
    m << Complex{1 + rz, 0}, Complex{rx, -ry}, Complex{rx, ry}, Complex{1 - rz, 0};
    return DensityMatrix(m * 0.5, DensityMatrix::Check::kSkip);
}

DensityMatrix plus_n(int n) {
    std::vector<DensityMatrix> factors(static_cast<std::size_t>(n), plus());
    return DensityMatrix::product(factors);
}

}  // namespace states

double half_trace_norm(const ComplexMatrix &hermitian) {
    return 0.5 * hermitian_trace_norm(hermitian);
}

double trace_distance(const DensityMatrix &a, const DensityMatrix &b) {
    if (a.dim() != b.dim()) {
        throw Error(ErrorCode::kDimension, "trace distance between states of different dimension");
    }
    return std::clamp(half_trace_norm(a.matrix() - b.matrix()), 0.0, 1.0);
}

ComplexMatrix trace_out_operator(const ComplexMatrix &op, int n, std::span<const int> traced) {
    std::vector<bool> drop(static_cast<std::size_t>(n), false);
    for (int q : traced) {
        if (q < 0 || q >= n || drop[static_cast<std::size_t>(q)]) {
            throw Error(ErrorCode::kInvalidArgument, "invalid or repeated qubit in partial trace");
        }
        drop[static_cast<std::size_t>(q)] = true;
    }
    std::vector<int> kept;
    for (int q = 0; q < n; ++q) {
        if (!drop[static_cast<std::size_t>(q)]) {
            kept.push_back(q);
        }
    }
    const int kept_n = static_cast<int>(kept.size());
    const int traced_n = n - kept_n;
    std::vector<int> dropped;
    for (int q = 0; q < n; ++q) {
        if (drop[static_cast<std::size_t>(q)]) {
            dropped.push_back(q);
        }
    }

    // Scatter a reduced index (over `qubits`) back to a full basis index.
    auto scatter = [n](std::uint64_t reduced, const std::vector<int> &qubits) {
        std::uint64_t full = 0;
        const int m = static_cast<int>(qubits.size());
        for (int i = 0; i < m; ++i) {
            if (basis_bit(reduced, i, m)) {
                full |= qubit_mask(qubits[static_cast<std::size_t>(i)], n);
            }
        }
        return full;
    };

    const auto kept_dim = dimension_of(kept_n);
    const auto traced_dim = dimension_of(traced_n);
    std::vector<std::uint64_t> kept_index(kept_dim);
    std::vector<std::uint64_t> traced_index(traced_dim);
    for (std::uint64_t i = 0; i < kept_dim; ++i) {
        kept_index[i] = scatter(i, kept);
    }
    for (std::uint64_t i = 0; i < traced_dim; ++i) {
        traced_index[i] = scatter(i, dropped);
    }

    ComplexMatrix out = ComplexMatrix::Zero(static_cast<Eigen::Index>(kept_dim), static_cast<Eigen::Index>(kept_dim));
    for (std::uint64_t a = 0; a < kept_dim; ++a) {
        for (std::uint64_t b = 0; b < kept_dim; ++b) {
            Complex sum = 0;
            for (std::uint64_t t = 0; t < traced_dim; ++t) {
                sum += op(static_cast<Eigen::Index>(kept_index[a] | traced_index[t]),
                          static_cast<Eigen::Index>(kept_index[b] | traced_index[t]));
            }
            out(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = sum;
        }
    }
    return out;
}

DensityMatrix trace_out(const DensityMatrix &rho, std::span<const int> traced) {
    return DensityMatrix(trace_out_operator(rho.matrix(), rho.num_qubits(), traced), DensityMatrix::Check::kSkip);
}

}  // namespace qhe
