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
#include <optional>
#include <span>
#include <vector>

#include "hashing/hash_function.hpp"
#include "sim/circuit.hpp"
#include "sim/density.hpp"
#include "util/rng.hpp"

namespace qhe {

/// kappa: bits of per-qubit encryption randomness r (and the field degree).
/// max_qubits: N, the largest plaintext register. k: hash independence order.
struct SchemeParams {
    int kappa = 8;
    int max_qubits = 1;
    int k = 8;

    /// k = max(kappa, N).
    static SchemeParams with_default_k(int kappa, int max_qubits);

    /// kappa in [1, 32], N in [1, kMaxQubits], k >= N, k * kappa <= 4096.
    void validate() const;

    bool operator==(const SchemeParams &) const = default;
};

/// Classical secret key: one hash function. There is no evaluation key.
struct SecretKey {
    SchemeParams params;
    HashFunction hash;

    /// Description length, k * kappa bits.
    std::size_t bits() const {
        return static_cast<std::size_t>(params.k) * static_cast<std::size_t>(params.kappa);
    }
};

/// Measurement register: empty is the "not measured" symbol.
using Register = std::optional<std::uint8_t>;

/// Per-qubit (r, register) records plus the joint padded quantum share of
/// the qubits whose register is still empty (ascending qubit order).
class Ciphertext {
   public:
    Ciphertext(SchemeParams params, std::vector<std::uint32_t> randomness, std::vector<Register> registers,
               DensityMatrix share);

    const SchemeParams &params() const {
        return params_;
    }
    int num_qubits() const {
        return static_cast<int>(randomness_.size());
    }
    const std::vector<std::uint32_t> &randomness() const {
        return randomness_;
    }
    const std::vector<Register> &registers() const {
        return registers_;
    }
    const DensityMatrix &share() const {
        return share_;
    }
    /// Qubits with an empty register, ascending; these index the share.
    std::vector<int> live_qubits() const;

    /// Classical payload in bits: n * kappa for r plus 2 bits per register.
    std::size_t classical_bits() const;

   private:
    SchemeParams params_;
    std::vector<std::uint32_t> randomness_;
    std::vector<Register> registers_;
    DensityMatrix share_;
};

struct Plaintext {
    /// State of the unmeasured qubits (ascending order).
    DensityMatrix state;
    /// Decrypted bit for each measured qubit, empty for unmeasured ones.
    std::vector<Register> bits;
};

SecretKey keygen(const SchemeParams &params, Rng &rng);
SecretKey keygen(const SchemeParams &params, std::uint64_t seed);

/// Pads each qubit q with Z^{h(r_q)} for fresh uniform kappa-bit r_q.
/// Encryption is defined for any state; the security guarantee needs
/// plaintext_in_xy_space(rho).
Ciphertext encrypt(const SecretKey &key, const DensityMatrix &rho, Rng &rng);

/// Deterministic encryption with caller-chosen randomness, one r per qubit.
Ciphertext encrypt_with_randomness(const SecretKey &key, const DensityMatrix &rho,
                                   std::span<const std::uint32_t> randomness);

/// Whether the plaintext lies in the space where the pad hides it.
bool plaintext_in_xy_space(const DensityMatrix &rho);

/// Key-free homomorphic evaluation: gates act on the padded share as is,
/// then each measured qubit is X-measured (outcome sampled from `rng`) and
/// its masked bit stored in its register.
Ciphertext evaluate(const IqpCircuit &circuit, const Ciphertext &ct, Rng &rng);

struct EvaluatedBranch {
    double probability;
    Ciphertext ciphertext;
};

/// All measurement branches of evaluate() with their exact probabilities.
std::vector<EvaluatedBranch> evaluate_branches(const IqpCircuit &circuit, const Ciphertext &ct);

/// Registers empty: un-pad the share by Z^{h(r)}. Register set: h(r) xor mu.
Plaintext decrypt(const SecretKey &key, const Ciphertext &ct);

}  // namespace qhe
