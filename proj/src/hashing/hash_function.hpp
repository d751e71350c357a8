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
#include <functional>
#include <string>
#include <vector>

#include "hashing/gf2k.hpp"
#include "util/rng.hpp"

namespace qhe {

/// A member of the k-wise independent family {0,1}^kappa -> {0,1}: the
/// degree-(k-1) polynomial c_0 + c_1 x + ... + c_{k-1} x^{k-1} over
/// GF(2^kappa), followed by the least significant bit of the value.
class HashFunction {
   public:
    HashFunction(int kappa, std::vector<std::uint32_t> coefficients);

    /// Coefficients drawn uniformly from GF(2^kappa)^k.
    static HashFunction sample(int kappa, int k, Rng &rng);

    /// The index-th member of the family in a fixed enumeration order
    /// (coefficient i is bits [i*kappa, (i+1)*kappa) of index).
    static HashFunction from_index(int kappa, int k, std::uint64_t index);

    /// Family size 2^(k*kappa); throws when it does not fit in 64 bits.
    static std::uint64_t family_size(int kappa, int k);

    int kappa() const {
        return field_.degree();
    }
    int k() const {
        return static_cast<int>(coefficients_.size());
    }
    const std::vector<std::uint32_t> &coefficients() const {
        return coefficients_;
    }
    const GF2k &field() const {
        return field_;
    }

    /// h(r). `r` holds a kappa-bit string read big-endian (first bit is the
    /// x^{kappa-1} coefficient). Throws if r has bits beyond kappa.
    int operator()(std::uint32_t r) const;

    /// Polynomial value before bit extraction.
    std::uint32_t polynomial_value(std::uint32_t r) const;

    /// Concatenated big-endian coefficient bit strings, c_0 first; exactly
    /// k * kappa entries.
    std::vector<bool> serialized_bits() const;
    static HashFunction from_serialized_bits(int kappa, int k, const std::vector<bool> &bits);

    /// serialized_bits() as lowercase hex, zero padded on the right to a whole
    /// number of nibbles.
    std::string to_hex() const;
    static HashFunction from_hex(int kappa, int k, const std::string &hex);

    bool operator==(const HashFunction &other) const {
        return kappa() == other.kappa() && coefficients_ == other.coefficients_;
    }

   private:
    GF2k field_;
    std::vector<std::uint32_t> coefficients_;
};

/// Calls `visit` on every member of the family, in from_index order.
void for_each_hash(int kappa, int k, const std::function<void(const HashFunction &)> &visit);

}  // namespace qhe
