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

#include "json.hpp"
#include "verification/bounds.hpp"
#include "verification/checks.hpp"

namespace qhe {

nlohmann::json params_json(const SchemeParams &params);
nlohmann::json security_result_json(const SecurityResult &result);

/// Verification reports: every input, seed, computed bound and witness.
/// Each has a top-level "passed" flag.
nlohmann::json correctness_report(const CorrectnessSuiteOptions &options, const CorrectnessSuiteResult &result,
                                  double tolerance);
nlohmann::json security_report(const SecuritySuiteOptions &options, const SecuritySuiteResult &result,
                               double tolerance);

struct BoundsOptions {
    double delta = 1e-4;
    double epsilon = 1e-4;
    int p_max = 64;
    /// Weak error and N used for the amplification line.
    double eps_weak = 0x1.0p-40;
    int amplification_qubits = 10;
};

/// Passes when every audited p in [1, p_max] yields a contradiction.
nlohmann::json bounds_report(const BoundsOptions &options);

}  // namespace qhe
