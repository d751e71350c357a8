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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "scheme/scheme.hpp"
#include "sim/circuit.hpp"

namespace qhe {

/// A classical-quantum state: outcome string -> p(outcome) * sigma(outcome).
using CqState = std::map<std::uint64_t, ComplexMatrix>;

CqState cq_from_branches(const std::vector<OutcomeBranch> &branches);

/// Trace distance of two classical-quantum states, sum over outcomes of
/// (1/2) || p sigma - p' sigma' ||_1. Reduces to total variation when no
/// qubit stays quantum.
double cq_distance(const CqState &a, const CqState &b);

/// Total variation between the outcome marginals.
double outcome_total_variation(const CqState &a, const CqState &b);

struct CorrectnessResult {
    /// Largest classical-quantum trace distance between the decrypted pipeline
    /// output and the plaintext circuit output.
    double residual = 0;
    /// Largest outcome total variation seen (a lower bound on residual).
    double outcome_tv = 0;
    int trials = 0;
    std::uint64_t worst_trial_seed = 0;
};

/// decrypt(evaluate(encrypt(rho))) against run_circuit(rho) with exact
/// measurement branches, over `trials` fresh keys and encryption randomness.
CorrectnessResult check_correctness(const SchemeParams &params, const IqpCircuit &circuit, const DensityMatrix &rho,
                                    int trials, std::uint64_t seed);

/// Decrypted classical-quantum output of evaluate_branches.
CqState decrypted_output(const SecretKey &key, const IqpCircuit &circuit, const Ciphertext &ct);

enum class SecurityMode {
    /// Enumerates every r vector and the whole hash family.
    kExact,
    /// Uniform pads on distinct r (valid for n <= k) plus the collision bound.
    kAnalytic,
};

struct SecurityResult {
    SecurityMode mode = SecurityMode::kExact;
    /// Trace distance of the two averaged ciphertext ensembles; only exact
    /// mode computes it.
    std::optional<double> distance;
    /// Same distance conditioned on all r values being distinct.
    double distance_distinct = 0;
    bool distinct_possible = true;
    /// Exact probability that some two r values coincide.
    double collision_probability = 0;
    double collision_bound = 0;
    /// Certified upper bound on the unconditioned distance. Equals `distance`
    /// in exact mode and distance_distinct + collision_bound in analytic mode.
    double bound = 0;
    /// r vector whose ciphertext blocks differ most (exact mode).
    std::vector<std::uint32_t> worst_randomness;
    double worst_block_distance = 0;
};

/// Limits for exact mode: kappa * n and kappa * k at most 12 each.
inline constexpr int kExactEnumerationBits = 12;

SecurityResult check_weak_security(const SchemeParams &params, const DensityMatrix &rho,
                                   const DensityMatrix &rho_prime, SecurityMode mode);

/// N (N - 1) / 2 * 2^-kappa, the union bound on an r collision.
double collision_bound(const SchemeParams &params);

/// 1 - prod_{i<N} (1 - i 2^-kappa).
double collision_probability(int kappa, int n);

/// Uniform average of Z^b rho Z^b over all pad patterns b.
DensityMatrix z_twirl(const DensityMatrix &rho);

// Randomized suites shared by the CLI and the acceptance harness.

struct CorrectnessSuiteOptions {
    int cases = 200;
    int max_qubits = 4;
    int max_gates = 10;
    int kappa = 8;
    int k = 8;
    int trials_per_case = 2;
    std::uint64_t seed = 1;
};

struct CorrectnessSuiteResult {
    double worst_residual = 0;
    double worst_outcome_tv = 0;
    int cases = 0;
    int worst_case = -1;
    std::string worst_circuit;
};

CorrectnessSuiteResult run_correctness_suite(const CorrectnessSuiteOptions &options);

struct SecuritySuiteOptions {
    SchemeParams params{3, 2, 3};
    int pairs = 20;
    SecurityMode mode = SecurityMode::kExact;
    std::uint64_t seed = 1;
};

struct SecuritySuiteResult {
    double worst_distance = 0;
    double worst_distance_distinct = 0;
    double worst_bound = 0;
    double collision_bound = 0;
    /// |+>|+> against |+>|->: leaks exactly on an r collision.
    SecurityResult collision_witness;
    int pairs = 0;
};

SecuritySuiteResult run_security_suite(const SecuritySuiteOptions &options);

std::string describe_circuit(const IqpCircuit &circuit);

}  // namespace qhe
