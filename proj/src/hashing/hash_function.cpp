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

#include "hashing/hash_function.hpp"

#include "util/error.hpp"

namespace qhe {

HashFunction::HashFunction(int kappa, std::vector<std::uint32_t> coefficients)
    : field_(kappa), coefficients_(std::move(coefficients)) {
    if (coefficients_.empty()) {
        throw Error(ErrorCode::kInvalidArgument, "hash independence order k must be at least 1");
    }
    for (auto c : coefficients_) {
        if (!field_.contains(c)) {
            throw Error(ErrorCode::kInvalidArgument, "hash coefficient outside GF(2^kappa)");
        }
    }
}

HashFunction HashFunction::sample(int kappa, int k, Rng &rng) {
    if (kappa < 1) {
        throw Error(ErrorCode::kInvalidArgument, "kappa must be at least 1");
    }
    if (k < 1) {
        throw Error(ErrorCode::kInvalidArgument, "k must be at least 1");
    }
    std::vector<std::uint32_t> coefficients(static_cast<std::size_t>(k));
    for (auto &c : coefficients) {
        c = static_cast<std::uint32_t>(rng.bits(kappa));
    }
    return HashFunction(kappa, std::move(coefficients));
}

std::uint64_t HashFunction::family_size(int kappa, int k) {
    if (kappa < 1 || k < 1 || static_cast<long>(kappa) * k >= 64) {
        throw Error(ErrorCode::kInfeasible, "hash family too large to enumerate");
    }
    return std::uint64_t{1} << (kappa * k);
}

HashFunction HashFunction::from_index(int kappa, int k, std::uint64_t index) {
    if (index >= family_size(kappa, k)) {
        throw Error(ErrorCode::kInvalidArgument, "hash family index out of range");
    }
    const std::uint64_t mask = (std::uint64_t{1} << kappa) - 1;
    std::vector<std::uint32_t> coefficients(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        coefficients[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>((index >> (i * kappa)) & mask);
    }
    return HashFunction(kappa, std::move(coefficients));
}

std::uint32_t HashFunction::polynomial_value(std::uint32_t r) const {
    if (!field_.contains(r)) {
        throw Error(ErrorCode::kInvalidArgument, "hash input longer than kappa bits");
    }
    std::uint32_t acc = 0;
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
        acc = GF2k::add(field_.mul(acc, r), *it);
    }
    return acc;
}

int HashFunction::operator()(std::uint32_t r) const {
    return static_cast<int>(polynomial_value(r) & 1U);
}

std::vector<bool> HashFunction::serialized_bits() const {
    const int kappa = field_.degree();
    std::vector<bool> bits;
    bits.reserve(coefficients_.size() * static_cast<std::size_t>(kappa));
    for (auto c : coefficients_) {
        for (int b = kappa - 1; b >= 0; --b) {
            bits.push_back(((c >> b) & 1U) != 0);
        }
    }
    return bits;
}

HashFunction HashFunction::from_serialized_bits(int kappa, int k, const std::vector<bool> &bits) {
    if (kappa < 1 || k < 1 || bits.size() != static_cast<std::size_t>(kappa) * static_cast<std::size_t>(k)) {
        throw Error(ErrorCode::kParse, "key material length is not k * kappa bits");
    }
    std::vector<std::uint32_t> coefficients(static_cast<std::size_t>(k), 0);
    std::size_t pos = 0;
    for (auto &c : coefficients) {
        for (int b = 0; b < kappa; ++b) {
            c = (c << 1) | (bits[pos++] ? 1U : 0U);
        }
    }
    return HashFunction(kappa, std::move(coefficients));
}

std::string HashFunction::to_hex() const {
    static const char *kDigits = "0123456789abcdef";
    const auto bits = serialized_bits();
    std::string out;
    for (std::size_t i = 0; i < bits.size(); i += 4) {
        int nibble = 0;
        for (std::size_t j = 0; j < 4; ++j) {
            nibble = (nibble << 1) | ((i + j < bits.size() && bits[i + j]) ? 1 : 0);
        }
        out.push_back(kDigits[nibble]);
    }
    return out;
}

HashFunction HashFunction::from_hex(int kappa, int k, const std::string &hex) {
    if (kappa < 1 || k < 1) {
        throw Error(ErrorCode::kParse, "invalid key parameters");
    }
    const std::size_t total = static_cast<std::size_t>(kappa) * static_cast<std::size_t>(k);
    if (hex.size() != (total + 3) / 4) {
        throw Error(ErrorCode::kParse, "key material has the wrong number of hex digits");
    }
    std::vector<bool> bits;
    bits.reserve(hex.size() * 4);
    for (char ch : hex) {
        int v;
        if (ch >= '0' && ch <= '9') {
            v = ch - '0';
        } else if (ch >= 'a' && ch <= 'f') {
            v = ch - 'a' + 10;
        } else {
            throw Error(ErrorCode::kParse, "key material is not lowercase hex");
        }
        for (int b = 3; b >= 0; --b) {
            bits.push_back(((v >> b) & 1) != 0);
        }
    }
    for (std::size_t i = total; i < bits.size(); ++i) {
        if (bits[i]) {
            throw Error(ErrorCode::kParse, "nonzero padding in key material");
        }
    }
    bits.resize(total);
    return from_serialized_bits(kappa, k, bits);
}

void for_each_hash(int kappa, int k, const std::function<void(const HashFunction &)> &visit) {
    const std::uint64_t size = HashFunction::family_size(kappa, k);
    for (std::uint64_t index = 0; index < size; ++index) {
        visit(HashFunction::from_index(kappa, k, index));
    }
}

}  // namespace qhe
