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

#include "delegation/framing.hpp"

#include "util/error.hpp"

namespace qhe {

std::string encode_frame(std::string_view payload) {
    if (payload.size() > kMaxFrameBytes) {
        throw Error(ErrorCode::kTransport, "frame payload too large");
    }
    const auto len = static_cast<std::uint32_t>(payload.size());
    std::string out;
    out.reserve(4 + payload.size());
    out.push_back(static_cast<char>((len >> 24) & 0xFF));
    out.push_back(static_cast<char>((len >> 16) & 0xFF));
    out.push_back(static_cast<char>((len >> 8) & 0xFF));
    out.push_back(static_cast<char>(len & 0xFF));
    out.append(payload);
    return out;
}

void FrameDecoder::feed(std::string_view bytes) {
    if (offset_ > 0 && offset_ == buffer_.size()) {
        buffer_.clear();
        offset_ = 0;
    }
    buffer_.append(bytes);
}

std::optional<std::string> FrameDecoder::next() {
    if (pending() < 4) {
        return std::nullopt;
    }
    std::uint32_t len = 0;
    for (int i = 0; i < 4; ++i) {
        len = (len << 8) | static_cast<unsigned char>(buffer_[offset_ + static_cast<std::size_t>(i)]);
    }
    if (len > kMaxFrameBytes) {
        throw Error(ErrorCode::kTransport, "malformed frame: length " + std::to_string(len) + " exceeds limit");
    }
    if (pending() < 4 + static_cast<std::size_t>(len)) {
        return std::nullopt;
    }
    std::string payload = buffer_.substr(offset_ + 4, len);
    offset_ += 4 + len;
    return payload;
}

}  // namespace qhe
