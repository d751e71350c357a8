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

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sim/density.hpp"
#include "sim/linalg.hpp"

namespace qhe {

/// i^c Z^u X^v on n qubits, with u and v stored as bit masks where bit j
/// belongs to qubit j. The phase exponent c is kept mod 4.
class PauliOperator {
   public:
    static constexpr int kMaxQubits = 64;

    PauliOperator(int n, std::uint64_t z_bits, std::uint64_t x_bits, int phase = 0);

    static PauliOperator identity(int n);
    /// Parses strings such as "XIZ", "-iYY" or "+Z". Y is i^3 Z X so the
    /// resulting phase makes the matrix equal to the named Hermitian product.
    static PauliOperator from_label(std::string_view label);
    /// Recovers (u, v, c) from a dense matrix; throws if it is not i^c Z^u X^v.
    static PauliOperator from_matrix(const ComplexMatrix &m);

    int num_qubits() const {
        return num_qubits_;
    }
    std::uint64_t z_bits() const {
        return z_bits_;
    }
    std::uint64_t x_bits() const {
        return x_bits_;
    }
    int phase() const {
        return phase_;
    }
    bool z(int qubit) const {
        return ((z_bits_ >> qubit) & 1U) != 0;
    }
    bool x(int qubit) const {
        return ((x_bits_ >> qubit) & 1U) != 0;
    }

    /// u_P . v_Q + v_P . u_Q mod 2.
    int symplectic_product(const PauliOperator &other) const;
    bool commutes_with(const PauliOperator &other) const {
        return symplectic_product(other) == 0;
    }

    /// Same (u, v) with the phase that makes the matrix Hermitian, i.e. the
    /// plain I/X/Y/Z tensor product.
    PauliOperator hermitian_representative() const;

    PauliOperator operator*(const PauliOperator &rhs) const;
    bool operator==(const PauliOperator &other) const = default;

    /// Sign-and-letters form, e.g. "+XY" or "-iZ".
    std::string label() const;

   private:
    int num_qubits_;
    std::uint64_t z_bits_;
    std::uint64_t x_bits_;
    int phase_;
};

/// Dense 2^n x 2^n matrix of i^c Z^u X^v.
ComplexMatrix pauli_matrix(const PauliOperator &p);

struct PauliTerm {
    PauliOperator op;  // Hermitian representative
    double coefficient;
};

/// All 4^n coefficients alpha_P = Tr(P rho) / 2^n in the Hermitian Pauli basis.
/// Throws if `op` is not Hermitian within `hermitian_tolerance`.
std::vector<PauliTerm> pauli_decompose(const ComplexMatrix &op, double hermitian_tolerance = kHermitianTolerance);

/// sum_P alpha_P P.
ComplexMatrix pauli_reconstruct(std::span<const PauliTerm> terms, int n);

/// Coefficients with |alpha| at or below this are treated as zero.
inline constexpr double kXyCoefficientTolerance = 1e-10;

/// True iff no term with a nonzero coefficient has a bare Z (u_j = 1, v_j = 0)
/// on any of `message_qubits`. Y factors are allowed.
bool is_xy_state(const DensityMatrix &rho, std::span<const int> message_qubits);
bool is_xy_state(const DensityMatrix &rho);

struct BlochVector {
    double x = 0;
    double y = 0;
    double z = 0;

    double norm_squared() const {
        return x * x + y * y + z * z;
    }
};

BlochVector bloch_vector(const DensityMatrix &rho);

}  // namespace qhe
