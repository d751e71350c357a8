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

#include <vector>

#include "hashing/hash_function.hpp"
#include "oracles.hpp"

namespace oracle {

/// Ciphertext ensemble distance by brute force: for each r vector, average
/// Z^{h(r)} rho Z^{h(r)} over every member of the family, then sum the
/// per-r half trace norms weighted by 2^{-kappa n}. With distinct_only the
/// average runs over r vectors without repeats.
inline double brute_force_security(int kappa, int k, const Mat &a, const Mat &b, int n,
                                   bool distinct_only) {
    const std::uint32_t inputs = 1u << kappa;
    std::uint64_t vectors = 1;
    for (int q = 0; q < n; ++q) {
        vectors *= inputs;
    }
    std::vector<qhe::HashFunction> family;
    qhe::for_each_hash(kappa, k, [&](const qhe::HashFunction &h) { family.push_back(h); });
    double total = 0;
    std::uint64_t counted = 0;
    for (std::uint64_t index = 0; index < vectors; ++index) {
        std::vector<std::uint32_t> r(static_cast<std::size_t>(n));
        std::uint64_t rest = index;
        for (int q = n - 1; q >= 0; --q) {
            r[static_cast<std::size_t>(q)] = static_cast<std::uint32_t>(rest % inputs);
            rest /= inputs;
        }
        bool distinct = true;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                distinct = distinct && r[static_cast<std::size_t>(i)] != r[static_cast<std::size_t>(j)];
            }
        }
        if (distinct_only && !distinct) {
            continue;
        }
        ++counted;
        Mat diff = Mat::Zero(a.rows(), a.cols());
        for (const auto &h : family) {
            std::vector<int> pads;
            for (auto x : r) {
                pads.push_back(h(x));
            }
            const Mat z = z_pattern(pads);
            diff += z * (a - b) * z;
        }
        total += half_trace_norm(diff / static_cast<double>(family.size()));
    }
    return total / static_cast<double>(counted);
}

}  // namespace oracle
