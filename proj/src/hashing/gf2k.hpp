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

namespace qhe {

/// Arithmetic in GF(2^k), 1 <= k <= 32, in polynomial basis. Elements are
/// the low k bits of a uint32; bit i is the coefficient of x^i.
class GF2k {
   public:
    static constexpr int kMaxDegree = 32;

    explicit GF2k(int degree);

    int degree() const {
        return degree_;
    }
    /// Irreducible modulus including the leading x^k term.
    std::uint64_t modulus() const {
        return modulus_;
    }
    std::uint64_t order() const {
        return std::uint64_t{1} << degree_;
    }
    bool contains(std::uint64_t a) const {
        return a < order();
    }

    static std::uint32_t add(std::uint32_t a, std::uint32_t b) {
        return a ^ b;
    }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
    /// Multiplicative inverse via a^(2^k - 2); a must be nonzero.
    std::uint32_t inv(std::uint32_t a) const;

   private:
    int degree_;
    std::uint64_t modulus_;
};

/// Table of low-weight irreducible polynomials (trinomials where one exists,
/// else pentanomials), indexed by degree.
std::uint64_t irreducible_polynomial(int degree);

}  // namespace qhe
