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

#include "verification/report.hpp"

namespace qhe {

using nlohmann::json;

json params_json(const SchemeParams &params) {
    return {{"kappa", params.kappa}, {"n_max", params.max_qubits}, {"k", params.k}};
}

json security_result_json(const SecurityResult &result) {
    json out = {
        {"mode", result.mode == SecurityMode::kExact ? "exact" : "analytic"},
        {"distance_distinct_r", result.distance_distinct},
        {"distinct_r_possible", result.distinct_possible},
        {"collision_probability", result.collision_probability},
        {"collision_bound", result.collision_bound},
        {"certified_bound", result.bound},
    };
    out["distance"] = result.distance ? json(*result.distance) : json(nullptr);
    if (!result.worst_randomness.empty()) {
        out["worst_randomness"] = result.worst_randomness;
        out["worst_block_distance"] = result.worst_block_distance;
    }
    return out;
}

json correctness_report(const CorrectnessSuiteOptions &options, const CorrectnessSuiteResult &result,
                        double tolerance) {
    return {
        {"mode", "correctness"},
        {"inputs",
         {{"cases", options.cases},
          {"max_qubits", options.max_qubits},
          {"max_gates", options.max_gates},
          {"kappa", options.kappa},
          {"k", options.k},
          {"trials_per_case", options.trials_per_case},
          {"seed", options.seed}}},
        {"residual", result.worst_residual},
        {"outcome_total_variation", result.worst_outcome_tv},
        {"tolerance", tolerance},
        {"witness", {{"case", result.worst_case}, {"circuit", result.worst_circuit}}},
        {"passed", result.worst_residual <= tolerance},
    };
}

json security_report(const SecuritySuiteOptions &options, const SecuritySuiteResult &result, double tolerance) {
    const bool exact = options.mode == SecurityMode::kExact;
    const bool passed = result.worst_distance_distinct <= tolerance &&
                        (exact ? result.worst_distance <= result.collision_bound + tolerance
                               : result.worst_bound <= result.collision_bound + tolerance);
    json out = {
        {"mode", "security"},
        {"inputs",
         {{"params", params_json(options.params)},
          {"pairs", options.pairs},
          {"method", exact ? "exact" : "analytic"},
          {"seed", options.seed}}},
        {"distance", result.worst_distance},
        {"distance_distinct_r", result.worst_distance_distinct},
        {"certified_bound", result.worst_bound},
        {"collision_bound", result.collision_bound},
        {"amplified_bound", amplify_weak_to_strong(std::min(1.0, result.worst_bound), options.params.max_qubits)},
        {"tolerance", tolerance},
        {"passed", passed},
    };
    if (options.params.max_qubits >= 2) {
        out["collision_witness"] = security_result_json(result.collision_witness);
        out["collision_witness"]["inputs"] = "|+>|+>... vs |+>|->...";
    }
    return out;
}

json bounds_report(const BoundsOptions &options) {
    const double arg = qpir_entropy_argument(options.delta, options.epsilon);
    json audits = json::array();
    bool all = true;
    for (int p = 1; p <= options.p_max; ++p) {
        const ReductionAudit a = qpir_reduction_audit(p, options.delta, options.epsilon);
        all = all && a.contradiction;
        audits.push_back({{"p", a.p},
                          {"n", a.n},
                          {"communicated", a.communicated},
                          {"communicated_log10_variant", a.communicated_log10_variant},
                          {"lower_bound", a.lower_bound},
                          {"contradiction", a.contradiction}});
    }
    return {
        {"mode", "bounds"},
        {"inputs",
         {{"delta", options.delta},
          {"epsilon", options.epsilon},
          {"p_max", options.p_max},
          {"eps_weak", options.eps_weak},
          {"amplification_qubits", options.amplification_qubits}}},
        {"entropy_argument", arg},
        {"entropy", binary_entropy(arg)},
        {"coefficient", qpir_coefficient(options.delta, options.epsilon)},
        {"communication_formula", "p * (1 + log2(100 p^2))"},
        {"audits", audits},
        {"amplified", amplify_weak_to_strong(options.eps_weak, options.amplification_qubits)},
        {"passed", all},
    };
}

}  // namespace qhe
