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

#include "hashing/gf2k.hpp"

#include <array>
#include <string>

#include "util/error.hpp"

namespace qhe {

namespace {

constexpr std::array<std::uint64_t, 33> kIrreducible = {
    0,           0x3,        0x7,        0xb,        0x13,        0x25,      0x43,
    0x83,        0x11b,      0x203,      0x409,      0x805,       0x1009,    0x201b,
    0x4021,      0x8003,     0x1002b,    0x20009,    0x40009,     0x80027,   0x100009,
    0x200005,    0x400003,   0x800021,   0x100001b,  0x2000009,   0x400001b, 0x8000027,
    0x10000003,  0x20000005, 0x40000003, 0x80000009, 0x10000008d,
};

}  // namespace

std::uint64_t irreducible_polynomial(int degree) {
    if (degree < 1 || degree > GF2k::kMaxDegree) {
        throw Error(ErrorCode::kInvalidArgument,
                    "field degree " + std::to_string(degree) + " outside [1, 32]");
    }
    return kIrreducible[static_cast<std::size_t>(degree)];
}

GF2k::GF2k(int degree) : degree_(degree), modulus_(irreducible_polynomial(degree)) {
}

std::uint32_t GF2k::mul(std::uint32_t a, std::uint32_t b) const {
    std::uint64_t product = 0;
    std::uint64_t shifted = a;
    while (b != 0) {
        if (b & 1U) {
            product ^= shifted;
        }
        b >>= 1;
        shifted <<= 1;
    }
    for (int bit = 2 * degree_ - 2; bit >= degree_; --bit) {
        if ((product >> bit) & 1U) {
            product ^= modulus_ << (bit - degree_);
        }
    }
    return static_cast<std::uint32_t>(product);
}

std::uint32_t GF2k::pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t result = 1;
    while (e != 0) {
        if (e & 1U) {
            result = mul(result, a);
        }
        a = mul(a, a);
        e >>= 1;
    }
    return result;
}

std::uint32_t GF2k::inv(std::uint32_t a) const {
    if (a == 0) {
        throw Error(ErrorCode::kInvalidArgument, "zero has no inverse");
    }
    return pow(a, order() - 2);
}

}  // namespace qhe
