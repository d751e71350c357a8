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

#include "util/rng.hpp"

#include "util/error.hpp"

namespace qhe {

std::uint64_t Rng::bits(int count) {
    if (count < 0 || count > 64) {
        throw Error(ErrorCode::kInvalidArgument, "Rng::bits count out of range");
    }
    if (count == 0) {
        return 0;
    }
    std::uint64_t word = engine_();
    return count == 64 ? word : (word >> (64 - count));
}

double Rng::uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

}  // namespace qhe
