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

#include "verification/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "util/error.hpp"

namespace qhe {

double binary_entropy(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw Error(ErrorCode::kInvalidArgument, "binary entropy argument outside [0, 1]");
    }
    if (p == 0.0 || p == 1.0) {
        return 0.0;
    }
    return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

double qpir_entropy_argument(double delta, double epsilon) {
    // delta = 1/2 is admitted: it is the guessing limit where the bound is 0.
    if (!(delta >= 0.0 && delta <= 0.5) || !(epsilon >= 0.0 && epsilon <= 0.5)) {
        throw Error(ErrorCode::kInvalidArgument, "delta and epsilon must lie in [0, 1/2]");
    }
    const double arg = 1.0 - delta - 2.0 * std::sqrt(epsilon * (1.0 - epsilon));
    if (arg < 0.0 || arg > 1.0) {
        throw Error(ErrorCode::kInvalidArgument, "entropy argument outside [0, 1]");
    }
    return arg;
}

double qpir_coefficient(double delta, double epsilon) {
    return 1.0 - binary_entropy(qpir_entropy_argument(delta, epsilon));
}

double qpir_lower_bound(const QpirBoundInput &input) {
    if (!(input.n >= 1)) {
        throw Error(ErrorCode::kInvalidArgument, "database size must be at least 1");
    }
    return qpir_coefficient(input.delta, input.epsilon) * input.n;
}

ReductionAudit qpir_reduction_audit(int p, double delta, double epsilon) {
    if (p < 1) {
        throw Error(ErrorCode::kInvalidArgument, "ciphertext expansion p must be at least 1");
    }
    ReductionAudit audit;
    audit.p = p;
    const double pd = static_cast<double>(p);
    audit.n = 100.0 * pd * pd;
    audit.communicated = pd * (1.0 + std::log2(audit.n));
    audit.communicated_log10_variant = pd * (1.0 + std::log2(10.0) + 2.0 * std::log2(pd));
    audit.lower_bound = qpir_lower_bound({audit.n, delta, epsilon});
    audit.contradiction = audit.communicated < audit.lower_bound;
    return audit;
}

double amplify_weak_to_strong(double eps_weak, int max_qubits) {
    if (!(eps_weak >= 0.0 && eps_weak <= 1.0)) {
        throw Error(ErrorCode::kInvalidArgument, "weak security error must lie in [0, 1]");
    }
    if (max_qubits < 0) {
        throw Error(ErrorCode::kInvalidArgument, "N must be non-negative");
    }
    if (eps_weak == 0.0) {
        return 0.0;
    }
    return std::min(1.0, std::ldexp(eps_weak, 2 * max_qubits + 1));
}

}  // namespace qhe
