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
#include <random>

namespace qhe {

/// Seedable bit source. Only raw engine output is consumed (no std
/// distributions), so a given seed yields the same stream on every platform.
class Rng {
   public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {
    }

    std::uint64_t next() {
        return engine_();
    }

    /// `count` uniform bits in the low end of the result, count <= 64.
    std::uint64_t bits(int count);

    /// Uniform double in [0, 1) with 53 bits of resolution.
    double uniform();

    /// Derives an independent child seed; used to split one seed across trials.
    std::uint64_t fork_seed() {
        return engine_() ^ 0x9e3779b97f4a7c15ULL;
    }

   private:
    std::mt19937_64 engine_;
};

}  // namespace qhe
