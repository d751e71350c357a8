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

namespace qhe {

/// -p log2 p - (1-p) log2 (1-p), with H(0) = H(1) = 0.
double binary_entropy(double p);

struct QpirBoundInput {
    double n = 1;        // database bits
    double delta = 0;    // correctness error
    double epsilon = 0;  // security error
};

/// 1 - delta - 2 sqrt(epsilon (1 - epsilon)), the entropy argument.
double qpir_entropy_argument(double delta, double epsilon);

/// 1 - H(1 - delta - 2 sqrt(epsilon (1 - epsilon))).
double qpir_coefficient(double delta, double epsilon);

/// Minimum qubits exchanged by a one-server QPIR protocol on n bits:
/// qpir_coefficient(delta, epsilon) * n.
double qpir_lower_bound(const QpirBoundInput &input);

/// Communication accounting for retrieving one of n = 100 p^2 bits through a
/// homomorphic scheme whose ciphertexts take p qubits per plaintext qubit.
struct ReductionAudit {
    int p = 0;
    double n = 0;
    /// p (1 + log2 n): log2 n encrypted index qubits sent, one answer qubit back.
    double communicated = 0;
    /// p (1 + log2 10 + 2 log2 p), the same count written with log2 10 in
    /// place of log2 100; reported for comparison only.
    double communicated_log10_variant = 0;
    double lower_bound = 0;
    bool contradiction = false;
};

ReductionAudit qpir_reduction_audit(int p, double delta, double epsilon);

/// min(1, 2^(2N+1) eps): weak (no reference system) to full bounded-message
/// security error.
double amplify_weak_to_strong(double eps_weak, int max_qubits);

}  // namespace qhe
