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

#include "sim/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qhe {

namespace {

ComplexMatrix named_non_diagonal(const std::string &name) {
    const double r = 1.0 / std::numbers::sqrt2;
    ComplexMatrix m;
    if (name == "H") {
        m.resize(2, 2);
        m << r, r, r, -r;
    } else if (name == "X") {
        m.resize(2, 2);
        m << 0, 1, 1, 0;
    } else if (name == "Y") {
        m.resize(2, 2);
        m << 0, Complex(0, -1), Complex(0, 1), 0;
    } else if (name == "CNOT" || name == "CX") {
        m = ComplexMatrix::Zero(4, 4);
        m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1;
    } else if (name == "SWAP") {
        m = ComplexMatrix::Zero(4, 4);
        m(0, 0) = m(1, 2) = m(2, 1) = m(3, 3) = 1;
    }
    return m;
}


}  // namespace

IqpCircuit::IqpCircuit(int n, std::vector<DiagonalGate> gates, std::vector<int> measured)
    : num_qubits_(n), gates_(std::move(gates)), measured_(std::move(measured)) {
    check_qubit_count(n);
    if (n == 0) {
        throw Error(ErrorCode::kInvalidArgument, "circuit needs at least one qubit");
    }
    for (const auto &g : gates_) {
        for (int q : g.support()) {
            if (q >= n) {
                throw Error(ErrorCode::kInvalidArgument, "gate " + g.name() + " acts outside the register");
            }
        }
    }
    std::sort(measured_.begin(), measured_.end());
    for (std::size_t i = 0; i < measured_.size(); ++i) {
        if (measured_[i] < 0 || measured_[i] >= n) {
            throw Error(ErrorCode::kInvalidArgument, "measured qubit out of range");
        }
        if (i > 0 && measured_[i] == measured_[i - 1]) {
            throw Error(ErrorCode::kInvalidArgument, "measured qubit listed twice");
        }
    }
}

std::vector<int> IqpCircuit::unmeasured() const {
    std::vector<int> out;
    for (int q = 0; q < num_qubits_; ++q) {
        if (!std::binary_search(measured_.begin(), measured_.end(), q)) {
            out.push_back(q);
        }
    }
    return out;
}

ComplexMatrix gate_spec_matrix(const GateSpec &gate) {
    if (gate.name == "DIAG") {
        const auto size = static_cast<Eigen::Index>(gate.phases.size());
        ComplexMatrix m = ComplexMatrix::Zero(size, size);
        for (Eigen::Index i = 0; i < size; ++i) {
            m(i, i) = gate.phases[static_cast<std::size_t>(i)];
        }
        return m;
    }
    if (gate.name == "MATRIX") {
        if (!gate.matrix) {
            throw Error(ErrorCode::kInvalidArgument, "MATRIX gate without a matrix");
        }
        return *gate.matrix;
    }
    ComplexMatrix m = named_non_diagonal(gate.name);
    if (m.size() != 0) {
        return m;
    }
    std::vector<int> local(gate.qubits.size());
    for (std::size_t i = 0; i < local.size(); ++i) {
        local[i] = static_cast<int>(i);
    }
    return DiagonalGate::named(gate.name, local).matrix(static_cast<int>(local.size()));
}

IqpCircuit validate_iqp(const CircuitSpec &spec) {
    if (spec.num_qubits < 1 || spec.num_qubits > kMaxQubits) {
        throw NotIqpError(std::nullopt, "circuit qubit count out of range");
    }
    std::vector<DiagonalGate> gates;
    for (std::size_t i = 0; i < spec.gates.size(); ++i) {
        const GateSpec &g = spec.gates[i];
        const std::string where = "gate " + std::to_string(i) + " (" + g.name + ")";
        for (int q : g.qubits) {
            if (q < 0 || q >= spec.num_qubits) {
                throw NotIqpError(i, where + " acts on qubit " + std::to_string(q) + " outside the register");
            }
        }
        ComplexMatrix m;
        try {
            m = gate_spec_matrix(g);
        } catch (const Error &e) {
            throw NotIqpError(i, where + ": " + e.what());
        }
        const auto expected = static_cast<Eigen::Index>(std::size_t{1} << g.qubits.size());
        if (g.qubits.empty() || g.qubits.size() > 3 || m.rows() != expected || m.cols() != expected) {
            throw NotIqpError(i, where + " has a matrix inconsistent with its qubit list");
        }
        std::vector<Complex> diagonal(static_cast<std::size_t>(expected));
        for (Eigen::Index r = 0; r < expected; ++r) {
            for (Eigen::Index c = 0; c < expected; ++c) {
                if (r != c && std::abs(m(r, c)) > kDiagonalTolerance) {
                    throw NotIqpError(i, where + " is not diagonal in the computational basis");
                }
            }
            diagonal[static_cast<std::size_t>(r)] = m(r, r);
        }
        try {
            if (g.name == "DIAG" || g.name == "MATRIX") {
                gates.emplace_back(g.qubits, std::move(diagonal));
            } else {
                gates.push_back(DiagonalGate::named(g.name, g.qubits));
            }
        } catch (const Error &e) {
            throw NotIqpError(i, where + ": " + e.what());
        }
    }
    try {
        return IqpCircuit(spec.num_qubits, std::move(gates), spec.measured);
    } catch (const Error &e) {
        throw NotIqpError(std::nullopt, e.what());
    }
}

ComplexMatrix project_x(const ComplexMatrix &rho, int n, int qubit, int bit) {
    const std::uint64_t flip = qubit_mask(qubit, n);
    const double sign = bit ? -1.0 : 1.0;
    const auto dim = static_cast<std::uint64_t>(rho.rows());
    ComplexMatrix out(rho.rows(), rho.cols());
    for (std::uint64_t b = 0; b < dim; ++b) {
        for (std::uint64_t a = 0; a < dim; ++a) {
            const auto ia = static_cast<Eigen::Index>(a);
            const auto ib = static_cast<Eigen::Index>(b);
            const auto fa = static_cast<Eigen::Index>(a ^ flip);
            const auto fb = static_cast<Eigen::Index>(b ^ flip);
            out(ia, ib) = 0.25 * (rho(ia, ib) + sign * (rho(fa, ib) + rho(ia, fb)) + rho(fa, fb));
        }
    }
    return out;
}

XMeasurement measure_x(const DensityMatrix &rho, int qubit) {
    const int n = rho.num_qubits();
    if (qubit < 0 || qubit >= n) {
        throw Error(ErrorCode::kInvalidArgument, "measured qubit out of range");
    }
    XMeasurement result;
    std::array<ComplexMatrix, 2> projected = {project_x(rho.matrix(), n, qubit, 0),
                                              project_x(rho.matrix(), n, qubit, 1)};
    std::array<double, 2> p = {std::max(0.0, projected[0].trace().real()),
                               std::max(0.0, projected[1].trace().real())};
    const double total = p[0] + p[1];
    for (int bit = 0; bit < 2; ++bit) {
        const double prob = p[static_cast<std::size_t>(bit)] / total;
        result.outcomes[static_cast<std::size_t>(bit)] = {qubit, bit, prob};
        if (p[static_cast<std::size_t>(bit)] > 0) {
            result.post_states[static_cast<std::size_t>(bit)].emplace(
                projected[static_cast<std::size_t>(bit)] / p[static_cast<std::size_t>(bit)],
                DensityMatrix::Check::kSkip);
        }
    }
    return result;
}

std::string format_outcome(std::uint64_t outcome, std::size_t measured_count) {
    std::string s(measured_count, '0');
    for (std::size_t i = 0; i < measured_count; ++i) {
        if ((outcome >> (measured_count - 1 - i)) & 1U) {
            s[i] = '1';
        }
    }
    return s;
}

std::vector<OutcomeBranch> measurement_branches(const DensityMatrix &rho, const std::vector<int> &measured) {
    const int n = rho.num_qubits();
    const std::size_t m = measured.size();
    std::vector<OutcomeBranch> branches;
    branches.reserve(std::size_t{1} << m);
    const int kept = n - static_cast<int>(m);
    for (std::uint64_t outcome = 0; outcome < (std::uint64_t{1} << m); ++outcome) {
        ComplexMatrix block = rho.matrix();
        for (std::size_t i = 0; i < m; ++i) {
            block = project_x(block, n, measured[i], static_cast<int>((outcome >> (m - 1 - i)) & 1U));
        }
        const double prob = std::max(0.0, block.trace().real());
        ComplexMatrix reduced = trace_out_operator(block, n, measured);
        if (prob > 1e-300) {
            reduced /= prob;
            branches.push_back({outcome, prob, DensityMatrix(std::move(reduced), DensityMatrix::Check::kSkip)});
        } else {
            branches.push_back({outcome, 0.0, DensityMatrix::maximally_mixed(kept)});
        }
    }
    return branches;
}

SampledRun sample_measurements(const DensityMatrix &rho, const std::vector<int> &measured, Rng &rng) {
    DensityMatrix current = rho;
    std::uint64_t outcome = 0;
    for (int q : measured) {
        XMeasurement meas = measure_x(current, q);
        const int bit = rng.uniform() < meas.outcomes[0].probability ? 0 : 1;
        // Guard against sampling a zero-probability branch through rounding.
        const int chosen = meas.post_states[static_cast<std::size_t>(bit)] ? bit : 1 - bit;
        outcome = (outcome << 1) | static_cast<std::uint64_t>(chosen);
        current = *meas.post_states[static_cast<std::size_t>(chosen)];
    }
    return {outcome, trace_out(current, measured)};
}

CircuitRun run_circuit(const DensityMatrix &rho, const IqpCircuit &circuit) {
    if (rho.num_qubits() != circuit.num_qubits()) {
        throw Error(ErrorCode::kDimension, "circuit and state qubit counts differ");
    }
    DensityMatrix evolved = rho;
    for (const auto &g : circuit.gates()) {
        evolved = apply_diagonal(evolved, g);
    }
    auto branches = measurement_branches(evolved, circuit.measured());
    return {std::move(evolved), std::move(branches)};
}

SampledRun sample_circuit(const DensityMatrix &rho, const IqpCircuit &circuit, Rng &rng) {
    if (rho.num_qubits() != circuit.num_qubits()) {
        throw Error(ErrorCode::kDimension, "circuit and state qubit counts differ");
    }
    DensityMatrix evolved = rho;
    for (const auto &g : circuit.gates()) {
        evolved = apply_diagonal(evolved, g);
    }
    return sample_measurements(evolved, circuit.measured(), rng);
}

}  // namespace qhe
