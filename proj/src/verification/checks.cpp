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

#include "verification/checks.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "util/error.hpp"
#include "verification/generators.hpp"

namespace qhe {

namespace {

void accumulate(CqState &state, std::uint64_t outcome, const ComplexMatrix &weighted) {
    auto it = state.find(outcome);
    if (it == state.end()) {
        state.emplace(outcome, weighted);
    } else {
        it->second += weighted;
    }
}

std::vector<int> pad_pattern(std::uint64_t pattern, int n) {
    std::vector<int> pads(static_cast<std::size_t>(n));
    for (int q = 0; q < n; ++q) {
        pads[static_cast<std::size_t>(q)] = static_cast<int>((pattern >> q) & 1U);
    }
    return pads;
}

}  // namespace

CqState cq_from_branches(const std::vector<OutcomeBranch> &branches) {
    CqState out;
    for (const auto &b : branches) {
        accumulate(out, b.outcome, b.probability * b.residual.matrix());
    }
    return out;
}

double cq_distance(const CqState &a, const CqState &b) {
    double total = 0;
    for (const auto &[outcome, block] : a) {
        auto it = b.find(outcome);
        total += half_trace_norm(it == b.end() ? block : ComplexMatrix(block - it->second));
    }
    for (const auto &[outcome, block] : b) {
        if (!a.contains(outcome)) {
            total += half_trace_norm(block);
        }
    }
    return total;
}

double outcome_total_variation(const CqState &a, const CqState &b) {
    double total = 0;
    auto prob = [](const CqState &s, std::uint64_t o) {
        auto it = s.find(o);
        return it == s.end() ? 0.0 : it->second.trace().real();
    };
    for (const auto &[outcome, block] : a) {
        total += std::abs(block.trace().real() - prob(b, outcome));
    }
    for (const auto &[outcome, block] : b) {
        if (!a.contains(outcome)) {
            total += std::abs(block.trace().real());
        }
    }
    return 0.5 * total;
}

CqState decrypted_output(const SecretKey &key, const IqpCircuit &circuit, const Ciphertext &ct) {
    CqState out;
    const auto &measured = circuit.measured();
    for (const auto &branch : evaluate_branches(circuit, ct)) {
        const Plaintext pt = decrypt(key, branch.ciphertext);
        std::uint64_t outcome = 0;
        for (int q : measured) {
            outcome = (outcome << 1) | *pt.bits[static_cast<std::size_t>(q)];
        }
        accumulate(out, outcome, branch.probability * pt.state.matrix());
    }
    return out;
}

CorrectnessResult check_correctness(const SchemeParams &params, const IqpCircuit &circuit, const DensityMatrix &rho,
                                    int trials, std::uint64_t seed) {
    params.validate();
    if (trials < 1) {
        throw Error(ErrorCode::kInvalidArgument, "at least one trial required");
    }
    const CqState expected = cq_from_branches(run_circuit(rho, circuit).branches);
    CorrectnessResult result;
    Rng seeds(seed);
    for (int t = 0; t < trials; ++t) {
        const std::uint64_t trial_seed = seeds.fork_seed();
        Rng rng(trial_seed);
        const SecretKey key = keygen(params, rng);
        const Ciphertext ct = encrypt(key, rho, rng);
        const CqState actual = decrypted_output(key, circuit, ct);
        const double residual = cq_distance(expected, actual);
        result.outcome_tv = std::max(result.outcome_tv, outcome_total_variation(expected, actual));
        if (residual >= result.residual) {
            result.residual = residual;
            result.worst_trial_seed = trial_seed;
        }
        ++result.trials;
    }
    return result;
}

double collision_bound(const SchemeParams &params) {
    const double n = params.max_qubits;
    return n * (n - 1) / 2.0 * std::ldexp(1.0, -params.kappa);
}

double collision_probability(int kappa, int n) {
    double distinct = 1.0;
    for (int i = 1; i < n; ++i) {
        distinct *= std::max(0.0, 1.0 - std::ldexp(static_cast<double>(i), -kappa));
    }
    return 1.0 - distinct;
}

DensityMatrix z_twirl(const DensityMatrix &rho) {
    const int n = rho.num_qubits();
    const auto patterns = std::uint64_t{1} << n;
    ComplexMatrix acc = ComplexMatrix::Zero(rho.matrix().rows(), rho.matrix().cols());
    for (std::uint64_t b = 0; b < patterns; ++b) {
        acc += apply_z_pads(rho, pad_pattern(b, n)).matrix();
    }
    return DensityMatrix(acc / static_cast<double>(patterns), DensityMatrix::Check::kSkip);
}

SecurityResult check_weak_security(const SchemeParams &params, const DensityMatrix &rho,
                                   const DensityMatrix &rho_prime, SecurityMode mode) {
    params.validate();
    const int n = rho.num_qubits();
    if (rho_prime.num_qubits() != n) {
        throw Error(ErrorCode::kDimension, "security check needs states of equal size");
    }
    if (n > params.max_qubits) {
        throw Error(ErrorCode::kInvalidArgument, "plaintext larger than N");
    }
    const int kappa = params.kappa;
    SecurityResult result;
    result.mode = mode;
    result.collision_bound = collision_bound(params);
    result.collision_probability = collision_probability(kappa, n);
    result.distinct_possible = n <= (1 << std::min(kappa, 20));

    if (mode == SecurityMode::kAnalytic) {
        // Distinct r values get jointly uniform pads since n <= k.
        result.distance_distinct = trace_distance(z_twirl(rho), z_twirl(rho_prime));
        result.bound = std::min(1.0, result.distance_distinct + result.collision_bound);
        return result;
    }

    if (kappa * n > kExactEnumerationBits || kappa * params.k > kExactEnumerationBits) {
        throw Error(ErrorCode::kInfeasible, "exact security mode needs kappa*n and kappa*k at most " +
                                                std::to_string(kExactEnumerationBits));
    }

    // hash_bits[h * 2^kappa + r] = h(r) over the whole family.
    const std::uint64_t family = HashFunction::family_size(kappa, params.k);
    const std::uint64_t inputs = std::uint64_t{1} << kappa;
    std::vector<std::uint8_t> hash_bits(family * inputs);
    for (std::uint64_t h = 0; h < family; ++h) {
        const HashFunction fn = HashFunction::from_index(kappa, params.k, h);
        for (std::uint64_t r = 0; r < inputs; ++r) {
            hash_bits[h * inputs + r] = static_cast<std::uint8_t>(fn(static_cast<std::uint32_t>(r)));
        }
    }

    const std::uint64_t patterns = std::uint64_t{1} << n;
    std::vector<ComplexMatrix> padded_diff;
    for (std::uint64_t b = 0; b < patterns; ++b) {
        padded_diff.push_back(apply_z_pads(rho, pad_pattern(b, n)).matrix() -
                              apply_z_pads(rho_prime, pad_pattern(b, n)).matrix());
    }

    std::map<std::vector<std::uint64_t>, double> block_cache;
    const std::uint64_t vectors = std::uint64_t{1} << (kappa * n);
    const double weight = 1.0 / static_cast<double>(vectors);
    double total = 0;
    double distinct_total = 0;
    std::uint64_t distinct_count = 0;
    std::vector<std::uint32_t> r(static_cast<std::size_t>(n));
    for (std::uint64_t index = 0; index < vectors; ++index) {
        for (int q = 0; q < n; ++q) {
            r[static_cast<std::size_t>(q)] =
                static_cast<std::uint32_t>((index >> (kappa * (n - 1 - q))) & (inputs - 1));
        }
        std::vector<std::uint64_t> law(patterns, 0);
        for (std::uint64_t h = 0; h < family; ++h) {
            std::uint64_t pattern = 0;
            for (int q = 0; q < n; ++q) {
                pattern |= static_cast<std::uint64_t>(hash_bits[h * inputs + r[static_cast<std::size_t>(q)]]) << q;
            }
            ++law[pattern];
        }
        auto cached = block_cache.find(law);
        double block;
        if (cached != block_cache.end()) {
            block = cached->second;
        } else {
            ComplexMatrix averaged = ComplexMatrix::Zero(rho.matrix().rows(), rho.matrix().cols());
            for (std::uint64_t b = 0; b < patterns; ++b) {
                if (law[b] != 0) {
                    averaged += (static_cast<double>(law[b]) / static_cast<double>(family)) * padded_diff[b];
                }
            }
            block = half_trace_norm(averaged);
            block_cache.emplace(law, block);
        }
        total += weight * block;
        std::vector<std::uint32_t> sorted = r;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end()) {
            distinct_total += block;
            ++distinct_count;
        }
        if (block > result.worst_block_distance || result.worst_randomness.empty()) {
            result.worst_block_distance = block;
            result.worst_randomness = r;
        }
    }
    result.distance = total;
    result.distance_distinct = distinct_count ? distinct_total / static_cast<double>(distinct_count) : 0.0;
    result.distinct_possible = distinct_count > 0;
    result.bound = total;
    return result;
}

std::string describe_circuit(const IqpCircuit &circuit) {
    std::ostringstream out;
    out << "n=" << circuit.num_qubits();
    for (const auto &g : circuit.gates()) {
        out << "; " << g.name() << "[";
        for (std::size_t i = 0; i < g.support().size(); ++i) {
            out << (i ? "," : "") << g.support()[i];
        }
        out << "]";
    }
    out << "; measure[";
    for (std::size_t i = 0; i < circuit.measured().size(); ++i) {
        out << (i ? "," : "") << circuit.measured()[i];
    }
    out << "]";
    return out.str();
}

CorrectnessSuiteResult run_correctness_suite(const CorrectnessSuiteOptions &options) {
    if (options.cases < 1 || options.max_qubits < 1 || options.max_gates < 0) {
        throw Error(ErrorCode::kInvalidArgument, "invalid correctness suite options");
    }
    CorrectnessSuiteResult result;
    Rng rng(options.seed);
    for (int c = 0; c < options.cases; ++c) {
        const int n = 1 + static_cast<int>(rng.next() % static_cast<std::uint64_t>(options.max_qubits));
        const IqpCircuit circuit = random_iqp_circuit(n, options.max_gates, rng);
        const DensityMatrix rho = random_xy_product(n, rng);
        const SchemeParams params{options.kappa, options.max_qubits, std::max(options.k, options.max_qubits)};
        const auto check = check_correctness(params, circuit, rho, options.trials_per_case, rng.fork_seed());
        result.worst_outcome_tv = std::max(result.worst_outcome_tv, check.outcome_tv);
        if (check.residual >= result.worst_residual) {
            result.worst_residual = check.residual;
            result.worst_case = c;
            result.worst_circuit = describe_circuit(circuit);
        }
        ++result.cases;
    }
    return result;
}

SecuritySuiteResult run_security_suite(const SecuritySuiteOptions &options) {
    options.params.validate();
    SecuritySuiteResult result;
    result.collision_bound = collision_bound(options.params);
    Rng rng(options.seed);
    const int n = options.params.max_qubits;
    for (int i = 0; i < options.pairs; ++i) {
        const DensityMatrix a = random_xy_mixture(n, rng);
        const DensityMatrix b = random_xy_mixture(n, rng);
        const SecurityResult r = check_weak_security(options.params, a, b, options.mode);
        result.worst_distance = std::max(result.worst_distance, r.distance.value_or(r.bound));
        result.worst_distance_distinct = std::max(result.worst_distance_distinct, r.distance_distinct);
        result.worst_bound = std::max(result.worst_bound, r.bound);
        ++result.pairs;
    }
    if (n >= 2) {
        std::vector<DensityMatrix> left(static_cast<std::size_t>(n), states::plus());
        std::vector<DensityMatrix> right = left;
        right[1] = states::minus();
        result.collision_witness = check_weak_security(options.params, DensityMatrix::product(left),
                                                       DensityMatrix::product(right), options.mode);
    }
    return result;
}

}  // namespace qhe
