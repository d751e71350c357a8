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

#include <string>
#include <vector>

#include "pauli/pauli.hpp"
#include "sim/density.hpp"

namespace qhe {

inline constexpr double kUnitModulusTolerance = 1e-12;

/// A gate diagonal in the computational basis. phases[i] multiplies the
/// basis state whose support bits read i, with support[0] as the most
/// significant bit.
class DiagonalGate {
   public:
    /// Builds a "DIAG" gate; validates support size (1-3), distinctness and
    /// unit-modulus phases.
    DiagonalGate(std::vector<int> support, std::vector<Complex> phases);

    static DiagonalGate z(int q);
    static DiagonalGate s(int q);
    static DiagonalGate t(int q);
    static DiagonalGate cz(int a, int b);
    static DiagonalGate cs(int a, int b);
    static DiagonalGate ccz(int a, int b, int c);
    /// Named constructor lookup for Z, S, T, CZ, CS, CCZ.
    static DiagonalGate named(const std::string &name, const std::vector<int> &support);

    /// "Z", "S", "T", "CZ", "CS", "CCZ" or "DIAG".
    const std::string &name() const {
        return name_;
    }
    const std::vector<int> &support() const {
        return support_;
    }
    const std::vector<Complex> &phases() const {
        return phases_;
    }

    /// Dense 2^n x 2^n unitary on an n-qubit register.
    ComplexMatrix matrix(int n) const;

    /// Phase applied to full basis index `index` of an n-qubit register.
    Complex phase_for(std::uint64_t index, int n) const;

   private:
    DiagonalGate(std::string name, std::vector<int> support, std::vector<Complex> phases);

    std::string name_;
    std::vector<int> support_;
    std::vector<Complex> phases_;
};

/// U rho U^dagger for the diagonal unitary of `gate`.
DensityMatrix apply_diagonal(const DensityMatrix &rho, const DiagonalGate &gate);

/// P rho P^dagger.
DensityMatrix apply_pauli(const DensityMatrix &rho, const PauliOperator &p);

/// Z^{pads[q]} on each qubit q; the one-time-pad step.
DensityMatrix apply_z_pads(const DensityMatrix &rho, const std::vector<int> &pads);

}  // namespace qhe
