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

#include "scheme/scheme.hpp"

#include <algorithm>
#include <string>

#include "util/error.hpp"

namespace qhe {

namespace {

/// Gates applied to the live share, with supports renumbered to share
/// positions. Gates touching a measured qubit are rejected.
std::vector<DiagonalGate> remap_gates(const IqpCircuit &circuit, const std::vector<int> &live) {
    std::vector<int> position(static_cast<std::size_t>(circuit.num_qubits()), -1);
    for (std::size_t i = 0; i < live.size(); ++i) {
        position[static_cast<std::size_t>(live[i])] = static_cast<int>(i);
    }
    std::vector<DiagonalGate> out;
    out.reserve(circuit.gates().size());
    for (const auto &g : circuit.gates()) {
        std::vector<int> support;
        for (int q : g.support()) {
            if (position[static_cast<std::size_t>(q)] < 0) {
                throw Error(ErrorCode::kRemeasure,
                            "gate " + g.name() + " acts on already measured qubit " + std::to_string(q));
            }
            support.push_back(position[static_cast<std::size_t>(q)]);
        }
        out.emplace_back(std::move(support), g.phases());
    }
    return out;
}

struct PreparedEvaluation {
    DensityMatrix evolved;
    std::vector<int> live;
    std::vector<int> measured_positions;  // positions within the share
};

PreparedEvaluation prepare_evaluation(const IqpCircuit &circuit, const Ciphertext &ct) {
    if (circuit.num_qubits() != ct.num_qubits()) {
        throw Error(ErrorCode::kDimension, "circuit has " + std::to_string(circuit.num_qubits()) +
                                               " qubits but the ciphertext has " + std::to_string(ct.num_qubits()));
    }
    const auto live = ct.live_qubits();
    std::vector<int> measured_positions;
    for (int q : circuit.measured()) {
        if (ct.registers()[static_cast<std::size_t>(q)].has_value()) {
            throw Error(ErrorCode::kRemeasure, "register of qubit " + std::to_string(q) + " is already set");
        }
        measured_positions.push_back(
            static_cast<int>(std::lower_bound(live.begin(), live.end(), q) - live.begin()));
    }
    DensityMatrix evolved = ct.share();
    for (const auto &g : remap_gates(circuit, live)) {
        evolved = apply_diagonal(evolved, g);
    }
    return {std::move(evolved), live, std::move(measured_positions)};
}

Ciphertext with_outcome(const Ciphertext &ct, const IqpCircuit &circuit, std::uint64_t outcome,
                        DensityMatrix residual) {
    auto registers = ct.registers();
    const std::size_t m = circuit.measured().size();
    for (std::size_t i = 0; i < m; ++i) {
        registers[static_cast<std::size_t>(circuit.measured()[i])] =
            static_cast<std::uint8_t>((outcome >> (m - 1 - i)) & 1U);
    }
    return Ciphertext(ct.params(), ct.randomness(), std::move(registers), std::move(residual));
}

}  // namespace

SchemeParams SchemeParams::with_default_k(int kappa, int max_qubits) {
    return {kappa, max_qubits, std::max(kappa, max_qubits)};
}

void SchemeParams::validate() const {
    if (kappa < 1 || kappa > GF2k::kMaxDegree) {
        throw Error(ErrorCode::kInvalidArgument, "kappa must be in [1, 32]");
    }
    if (max_qubits < 1 || max_qubits > kMaxQubits) {
        throw Error(ErrorCode::kInvalidArgument, "N must be in [1, " + std::to_string(kMaxQubits) + "]");
    }
    if (k < max_qubits) {
        throw Error(ErrorCode::kInvalidArgument, "hash independence order k must be at least N");
    }
    if (static_cast<long>(k) * kappa > 4096) {
        throw Error(ErrorCode::kInvalidArgument, "key longer than 4096 bits");
    }
}

Ciphertext::Ciphertext(SchemeParams params, std::vector<std::uint32_t> randomness, std::vector<Register> registers,
                       DensityMatrix share)
    : params_(params), randomness_(std::move(randomness)), registers_(std::move(registers)), share_(std::move(share)) {
    params_.validate();
    if (randomness_.empty() || static_cast<int>(randomness_.size()) > params_.max_qubits) {
        throw Error(ErrorCode::kInvalidArgument, "ciphertext qubit count outside [1, N]");
    }
    if (registers_.size() != randomness_.size()) {
        throw Error(ErrorCode::kInvalidArgument, "one register per qubit required");
    }
    const std::uint64_t limit = std::uint64_t{1} << params_.kappa;
    for (auto r : randomness_) {
        if (r >= limit) {
            throw Error(ErrorCode::kInvalidArgument, "encryption randomness longer than kappa bits");
        }
    }
    for (const auto &reg : registers_) {
        if (reg && *reg > 1) {
            throw Error(ErrorCode::kInvalidArgument, "register value must be 0 or 1");
        }
    }
    if (static_cast<std::size_t>(share_.num_qubits()) != live_qubits().size()) {
        throw Error(ErrorCode::kDimension, "quantum share does not match the unmeasured qubits");
    }
}

std::vector<int> Ciphertext::live_qubits() const {
    std::vector<int> live;
    for (std::size_t q = 0; q < registers_.size(); ++q) {
        if (!registers_[q]) {
            live.push_back(static_cast<int>(q));
        }
    }
    return live;
}

std::size_t Ciphertext::classical_bits() const {
    return randomness_.size() * static_cast<std::size_t>(params_.kappa) + 2 * registers_.size();
}

SecretKey keygen(const SchemeParams &params, Rng &rng) {
    params.validate();
    return {params, HashFunction::sample(params.kappa, params.k, rng)};
}

SecretKey keygen(const SchemeParams &params, std::uint64_t seed) {
    Rng rng(seed);
    return keygen(params, rng);
}

Ciphertext encrypt_with_randomness(const SecretKey &key, const DensityMatrix &rho,
                                   std::span<const std::uint32_t> randomness) {
    const int n = rho.num_qubits();
    if (n < 1 || n > key.params.max_qubits) {
        throw Error(ErrorCode::kInvalidArgument, "plaintext has " + std::to_string(n) +
                                                     " qubits; the key admits 1 to " +
                                                     std::to_string(key.params.max_qubits));
    }
    if (static_cast<int>(randomness.size()) != n) {
        throw Error(ErrorCode::kInvalidArgument, "one randomness value per qubit required");
    }
    std::vector<int> pads(static_cast<std::size_t>(n));
    for (int q = 0; q < n; ++q) {
        pads[static_cast<std::size_t>(q)] = key.hash(randomness[static_cast<std::size_t>(q)]);
    }
    return Ciphertext(key.params, std::vector<std::uint32_t>(randomness.begin(), randomness.end()),
                      std::vector<Register>(static_cast<std::size_t>(n)), apply_z_pads(rho, pads));
}

Ciphertext encrypt(const SecretKey &key, const DensityMatrix &rho, Rng &rng) {
    std::vector<std::uint32_t> randomness(static_cast<std::size_t>(rho.num_qubits()));
    for (auto &r : randomness) {
        r = static_cast<std::uint32_t>(rng.bits(key.params.kappa));
    }
    return encrypt_with_randomness(key, rho, randomness);
}

bool plaintext_in_xy_space(const DensityMatrix &rho) {
    return is_xy_state(rho);
}

Ciphertext evaluate(const IqpCircuit &circuit, const Ciphertext &ct, Rng &rng) {
    auto prepared = prepare_evaluation(circuit, ct);
    SampledRun run = sample_measurements(prepared.evolved, prepared.measured_positions, rng);
    return with_outcome(ct, circuit, run.outcome, std::move(run.residual));
}

std::vector<EvaluatedBranch> evaluate_branches(const IqpCircuit &circuit, const Ciphertext &ct) {
    auto prepared = prepare_evaluation(circuit, ct);
    std::vector<EvaluatedBranch> out;
    for (auto &branch : measurement_branches(prepared.evolved, prepared.measured_positions)) {
        out.push_back({branch.probability, with_outcome(ct, circuit, branch.outcome, std::move(branch.residual))});
    }
    return out;
}

Plaintext decrypt(const SecretKey &key, const Ciphertext &ct) {
    if (!(key.params == ct.params())) {
        throw Error(ErrorCode::kParamsMismatch, "key and ciphertext parameters differ");
    }
    const auto live = ct.live_qubits();
    std::vector<int> pads(live.size());
    std::vector<Register> bits(ct.registers().size());
    for (std::size_t q = 0; q < ct.registers().size(); ++q) {
        const int pad = key.hash(ct.randomness()[q]);
        if (ct.registers()[q]) {
            bits[q] = static_cast<std::uint8_t>(pad ^ *ct.registers()[q]);
        }
    }
    for (std::size_t i = 0; i < live.size(); ++i) {
        pads[i] = key.hash(ct.randomness()[static_cast<std::size_t>(live[i])]);
    }
    DensityMatrix state = live.empty() ? ct.share() : apply_z_pads(ct.share(), pads);
    return {std::move(state), std::move(bits)};
}

}  // namespace qhe
