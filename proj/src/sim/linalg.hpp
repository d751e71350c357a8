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

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace qhe {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// Simulator dimension cap: dense matrices up to 1024 x 1024.
inline constexpr int kMaxQubits = 10;

/// Throws ErrorCode::kDimension when n is outside [0, kMaxQubits].
void check_qubit_count(int n);

/// Side length 2^n of an n-qubit operator.
inline std::size_t dimension_of(int n) {
    return std::size_t{1} << n;
}

/// Qubit 0 is the most significant bit of a basis index (first Kronecker
/// factor), matching the left-to-right reading of Z^u X^v.
inline int basis_bit(std::uint64_t index, int qubit, int n) {
    return static_cast<int>((index >> (n - 1 - qubit)) & 1U);
}

inline std::uint64_t qubit_mask(int qubit, int n) {
    return std::uint64_t{1} << (n - 1 - qubit);
}

/// Largest |a - a^dagger| entry.
double hermitian_defect(const ComplexMatrix &a);

/// Eigenvalues of a Hermitian matrix by cyclic complex Jacobi rotations,
/// sorted ascending. Only the Hermitian part of `a` is used.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix &a);

/// Trace norm sum |lambda_i| of a Hermitian matrix (no factor 1/2).
double hermitian_trace_norm(const ComplexMatrix &a);

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);

}  // namespace qhe
