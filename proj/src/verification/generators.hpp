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

#include "sim/circuit.hpp"
#include "sim/density.hpp"
#include "util/rng.hpp"

namespace qhe {

/// Random single-qubit state on the xy-plane disc (Bloch z = 0), uniform in
/// angle with radius sqrt(u) so the disc is covered uniformly.
DensityMatrix random_xy_qubit(Rng &rng);

/// Random single-qubit state with Bloch z bounded away from 0.
DensityMatrix random_non_xy_qubit(Rng &rng);

/// Tensor product of n random xy-plane qubits.
DensityMatrix random_xy_product(int n, Rng &rng);

/// Convex mixture of 1 to 3 random xy products; separable but correlated.
DensityMatrix random_xy_mixture(int n, Rng &rng);

/// Random full-rank density matrix (normalized G G^dagger, complex Gaussian G).
DensityMatrix random_density_matrix(int n, Rng &rng);

/// Random circuit over {Z, S, T, CZ, CS, CCZ, DIAG} with up to max_gates
/// gates and a random (possibly empty) measured subset.
IqpCircuit random_iqp_circuit(int n, int max_gates, Rng &rng);

}  // namespace qhe
