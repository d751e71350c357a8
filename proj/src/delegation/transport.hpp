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
#include <memory>
#include <optional>
#include <string>

#include "delegation/framing.hpp"

namespace qhe {

/// Bidirectional message channel carrying length-prefixed frames.
class Channel {
   public:
    virtual ~Channel() = default;
    virtual void send(const std::string &payload) = 0;
    /// Next payload, or nullopt once the peer has closed (or, in process,
    /// when nothing is queued).
    virtual std::optional<std::string> receive() = 0;
};

/// Two in-memory byte pipes joining a client end and a server end.
class InProcessLink {
   public:
    InProcessLink();
    ~InProcessLink();
    Channel &client_end();
    Channel &server_end();

   private:
    struct Pipe {
        FrameDecoder decoder;
    };
    class End;

    Pipe to_server_;
    Pipe to_client_;
    std::unique_ptr<End> client_;
    std::unique_ptr<End> server_;
};

/// Blocking TCP stream on IPv4 loopback.
class TcpChannel : public Channel {
   public:
    explicit TcpChannel(int fd);
    ~TcpChannel() override;
    TcpChannel(TcpChannel &&other) noexcept;
    TcpChannel &operator=(TcpChannel &&other) noexcept;
    TcpChannel(const TcpChannel &) = delete;
    TcpChannel &operator=(const TcpChannel &) = delete;

    static TcpChannel connect_loopback(int port);

    void send(const std::string &payload) override;
    std::optional<std::string> receive() override;

   private:
    int fd_;
    FrameDecoder decoder_;
};

class TcpListener {
   public:
    /// Port 0 picks an ephemeral port; see port().
    explicit TcpListener(int port);
    ~TcpListener();
    TcpListener(const TcpListener &) = delete;
    TcpListener &operator=(const TcpListener &) = delete;

    int port() const {
        return port_;
    }
    TcpChannel accept();

   private:
    int fd_;
    int port_;
};

}  // namespace qhe
