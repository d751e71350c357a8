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
#include <optional>
#include <string>
#include <string_view>

namespace qhe {

/// Frames larger than this are rejected as malformed.
inline constexpr std::uint32_t kMaxFrameBytes = 64u << 20;

/// 4-byte big-endian length followed by the payload.
std::string encode_frame(std::string_view payload);

/// Incremental decoder for a stream of frames.
class FrameDecoder {
   public:
    void feed(std::string_view bytes);
    /// Next complete payload, if one is buffered. Throws on an oversized
    /// length header.
    std::optional<std::string> next();
    /// Bytes held that do not yet form a complete frame.
    std::size_t pending() const {
        return buffer_.size() - offset_;
    }

   private:
    std::string buffer_;
    std::size_t offset_ = 0;
};

}  // namespace qhe
