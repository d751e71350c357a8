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

#include <span>
#include <vector>

#include "sim/linalg.hpp"

namespace qhe {

/// Tolerances for the density-operator invariants.
inline constexpr double kHermitianTolerance = 1e-12;
inline constexpr double kTraceTolerance = 1e-12;
inline constexpr double kPsdTolerance = 1e-10;

/// An n-qubit density operator: Hermitian, unit trace, positive semidefinite.
class DensityMatrix {
   public:
    enum class Check { kFull, kSkip };

    /// Validates the invariants unless `check` is kSkip. kSkip is for results
    /// of operations that preserve the invariants by construction.
    explicit DensityMatrix(ComplexMatrix matrix, Check check = Check::kFull);

    static DensityMatrix from_pure(const ComplexVector &amplitudes);
    static DensityMatrix maximally_mixed(int n);
    static DensityMatrix basis_state(int n, std::uint64_t index);
    /// Kronecker product in qubit order: factors[0] becomes qubit 0.
    static DensityMatrix product(std::span<const DensityMatrix> factors);

    int num_qubits() const {
        return num_qubits_;
    }
    std::size_t dim() const {
        return static_cast<std::size_t>(matrix_.rows());
    }
    const ComplexMatrix &matrix() const {
        return matrix_;
    }
    Complex operator()(std::size_t row, std::size_t col) const {
        return matrix_(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
    }

    /// Re-runs the full invariant check; throws on violation.
    void validate() const;

   private:
    int num_qubits_;
    ComplexMatrix matrix_;
};

/// Single-qubit states used throughout tests and fixtures.
namespace states {
DensityMatrix zero();
DensityMatrix one();
DensityMatrix plus();
DensityMatrix minus();
/// (|0> + e^{i phi}|1>)/sqrt(2).
DensityMatrix xy_plane(double phi);
/// (I + r.sigma)/2; requires |r| <= 1.
DensityMatrix from_bloch(double rx, double ry, double rz);
/// n-fold |+>.
DensityMatrix plus_n(int n);
}  // namespace states

/// (1/2) sum |lambda_i| over the eigenvalues of a - b.
double trace_distance(const DensityMatrix &a, const DensityMatrix &b);

/// (1/2) sum |lambda_i| of a Hermitian operator; used for unnormalized blocks
/// of classical-quantum states.
double half_trace_norm(const ComplexMatrix &hermitian);

/// Partial trace over `traced` qubits. Remaining qubits keep their relative
/// order.
DensityMatrix trace_out(const DensityMatrix &rho, std::span<const int> traced);

/// Unnormalized partial trace of an arbitrary operator on n qubits.
ComplexMatrix trace_out_operator(const ComplexMatrix &op, int n, std::span<const int> traced);

}  // namespace qhe
