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

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sim/density.hpp"
#include "sim/gates.hpp"
#include "util/error.hpp"
#include "util/rng.hpp"

namespace qhe {

/// Diagonal gates followed by X-basis measurement of `measured` (sorted,
/// distinct). Construction validates indices against n.
class IqpCircuit {
   public:
    IqpCircuit(int n, std::vector<DiagonalGate> gates, std::vector<int> measured);

    int num_qubits() const {
        return num_qubits_;
    }
    const std::vector<DiagonalGate> &gates() const {
        return gates_;
    }
    const std::vector<int> &measured() const {
        return measured_;
    }
    /// Qubits left unmeasured, ascending.
    std::vector<int> unmeasured() const;

   private:
    int num_qubits_;
    std::vector<DiagonalGate> gates_;
    std::vector<int> measured_;
};

/// A gate as written by a caller, before admissibility is decided. Named
/// gates may be diagonal (Z, S, T, CZ, CS, CCZ) or not (H, X, Y, CNOT, ...).
/// DIAG carries `phases`; MATRIX carries an explicit dense `matrix`.
struct GateSpec {
    std::string name;
    std::vector<int> qubits;
    std::vector<Complex> phases;
    std::optional<ComplexMatrix> matrix;
};

struct CircuitSpec {
    int num_qubits = 0;
    std::vector<GateSpec> gates;
    std::vector<int> measured;
};

/// Raised by validate_iqp; carries the index of the first rejected gate, or
/// no index when the problem is the measured list or qubit count.
class NotIqpError : public Error {
   public:
    NotIqpError(std::optional<std::size_t> gate_index, const std::string &message)
        : Error(ErrorCode::kNotIqp, message), gate_index_(gate_index) {
    }
    std::optional<std::size_t> gate_index() const {
        return gate_index_;
    }

   private:
    std::optional<std::size_t> gate_index_;
};

inline constexpr double kDiagonalTolerance = 1e-12;

/// Admits a candidate iff every gate is diagonal within 1e-12 (with unit
/// diagonal entries) and every index is well formed.
IqpCircuit validate_iqp(const CircuitSpec &spec);

/// Dense matrix of a candidate gate (named, DIAG or MATRIX), local to its
/// qubits with qubits[0] as the most significant bit.
ComplexMatrix gate_spec_matrix(const GateSpec &gate);

struct MeasurementOutcome {
    int qubit = 0;
    int bit = 0;  // 0 for |+>, 1 for |->
    double probability = 0;
};

struct XMeasurement {
    std::array<MeasurementOutcome, 2> outcomes;
    /// Normalized post-measurement states; empty when the outcome has zero
    /// probability.
    std::array<std::optional<DensityMatrix>, 2> post_states;
};

/// Pi rho Pi with Pi = (I + (-1)^bit X_q)/2, unnormalized.
ComplexMatrix project_x(const ComplexMatrix &rho, int n, int qubit, int bit);

XMeasurement measure_x(const DensityMatrix &rho, int qubit);

/// Outcome strings pack measured[i] at bit (m - 1 - i), so the binary
/// rendering reads in measured order.
std::string format_outcome(std::uint64_t outcome, std::size_t measured_count);

struct OutcomeBranch {
    std::uint64_t outcome = 0;
    double probability = 0;
    /// Normalized state of the unmeasured qubits given this outcome; the
    /// maximally mixed state when the probability vanishes.
    DensityMatrix residual;
};

struct CircuitRun {
    /// State after all gates, before measurement.
    DensityMatrix evolved;
    /// All 2^|measured| outcomes, in ascending outcome order.
    std::vector<OutcomeBranch> branches;
};

struct SampledRun {
    std::uint64_t outcome = 0;
    DensityMatrix residual;
};

/// Applies the gates then measures the measured subset at the end. Branch
/// probabilities come from the projector products, not from sampling.
CircuitRun run_circuit(const DensityMatrix &rho, const IqpCircuit &circuit);

/// Same evolution with one outcome sampled qubit by qubit.
SampledRun sample_circuit(const DensityMatrix &rho, const IqpCircuit &circuit, Rng &rng);

/// Exact measurement branches of an already-evolved state over `measured`.
std::vector<OutcomeBranch> measurement_branches(const DensityMatrix &rho, const std::vector<int> &measured);

/// Sequentially samples X outcomes of `measured`, then traces them out.
SampledRun sample_measurements(const DensityMatrix &rho, const std::vector<int> &measured, Rng &rng);

}  // namespace qhe
