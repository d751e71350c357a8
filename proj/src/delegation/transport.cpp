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

#include "delegation/transport.hpp"

#include <arpa/inet.h>
#include <netinet/in.h>
#include <netinet/tcp.h>
#include <sys/socket.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>

#include "util/error.hpp"

namespace qhe {

class InProcessLink::End : public Channel {
   public:
    End(Pipe &out, Pipe &in) : out_(out), in_(in) {
    }
    void send(const std::string &payload) override {
        out_.decoder.feed(encode_frame(payload));
    }
    std::optional<std::string> receive() override {
        return in_.decoder.next();
    }

   private:
    Pipe &out_;
    Pipe &in_;
};

InProcessLink::InProcessLink()
    : client_(std::make_unique<End>(to_server_, to_client_)), server_(std::make_unique<End>(to_client_, to_server_)) {
}

InProcessLink::~InProcessLink() = default;

Channel &InProcessLink::client_end() {
    return *client_;
}

Channel &InProcessLink::server_end() {
    return *server_;
}

namespace {

[[noreturn]] void throw_errno(const std::string &what) {
    throw Error(ErrorCode::kTransport, what + ": " + std::strerror(errno));
}

}  // namespace

TcpChannel::TcpChannel(int fd) : fd_(fd) {
    // Each request is two small frames; without this the second one waits on
    // a delayed ACK.
    const int one = 1;
    ::setsockopt(fd_, IPPROTO_TCP, TCP_NODELAY, &one, sizeof(one));
}

TcpChannel::~TcpChannel() {
    if (fd_ >= 0) {
        ::close(fd_);
    }
}

TcpChannel::TcpChannel(TcpChannel &&other) noexcept : fd_(other.fd_), decoder_(std::move(other.decoder_)) {
    other.fd_ = -1;
}

TcpChannel &TcpChannel::operator=(TcpChannel &&other) noexcept {
    if (this != &other) {
        if (fd_ >= 0) {
            ::close(fd_);
        }
        fd_ = other.fd_;
        decoder_ = std::move(other.decoder_);
        other.fd_ = -1;
    }
    return *this;
}

TcpChannel TcpChannel::connect_loopback(int port) {
    const int fd = ::socket(AF_INET, SOCK_STREAM, 0);
    if (fd < 0) {
        throw_errno("socket");
    }
    TcpChannel channel(fd);
    sockaddr_in addr{};
    addr.sin_family = AF_INET;
    addr.sin_port = htons(static_cast<std::uint16_t>(port));
    addr.sin_addr.s_addr = htonl(INADDR_LOOPBACK);
    if (::connect(fd, reinterpret_cast<const sockaddr *>(&addr), sizeof(addr)) != 0) {
        throw_errno("connect to 127.0.0.1:" + std::to_string(port));
    }
    return channel;
}

void TcpChannel::send(const std::string &payload) {
    const std::string frame = encode_frame(payload);
    std::size_t sent = 0;
    while (sent < frame.size()) {
        const ssize_t rv = ::send(fd_, frame.data() + sent, frame.size() - sent, MSG_NOSIGNAL);
        if (rv < 0) {
            if (errno == EINTR) {
                continue;
            }
            throw_errno("send");
        }
        sent += static_cast<std::size_t>(rv);
    }
}

std::optional<std::string> TcpChannel::receive() {
    char buf[1 << 16];
    while (true) {
        if (auto payload = decoder_.next()) {
            return payload;
        }
        const ssize_t rv = ::recv(fd_, buf, sizeof(buf), 0);
        if (rv < 0) {
            if (errno == EINTR) {
                continue;
            }
            throw_errno("recv");
        }
        if (rv == 0) {
            if (decoder_.pending() != 0) {
                throw Error(ErrorCode::kTransport, "connection closed inside a frame");
            }
            return std::nullopt;
        }
        decoder_.feed(std::string_view(buf, static_cast<std::size_t>(rv)));
    }
}

TcpListener::TcpListener(int port) : fd_(::socket(AF_INET, SOCK_STREAM, 0)), port_(port) {
    if (fd_ < 0) {
        throw_errno("socket");
    }
    const int yes = 1;
    ::setsockopt(fd_, SOL_SOCKET, SO_REUSEADDR, &yes, sizeof(yes));
    sockaddr_in addr{};
    addr.sin_family = AF_INET;
    addr.sin_port = htons(static_cast<std::uint16_t>(port));
    addr.sin_addr.s_addr = htonl(INADDR_LOOPBACK);
    if (::bind(fd_, reinterpret_cast<const sockaddr *>(&addr), sizeof(addr)) != 0) {
        const int saved = errno;
        ::close(fd_);
        errno = saved;
        throw_errno("bind 127.0.0.1:" + std::to_string(port));
    }
    if (::listen(fd_, 4) != 0) {
        const int saved = errno;
        ::close(fd_);
        errno = saved;
        throw_errno("listen");
    }
    socklen_t len = sizeof(addr);
    ::getsockname(fd_, reinterpret_cast<sockaddr *>(&addr), &len);
    port_ = ntohs(addr.sin_port);
}

TcpListener::~TcpListener() {
    ::close(fd_);
}

TcpChannel TcpListener::accept() {
    while (true) {
        const int fd = ::accept(fd_, nullptr, nullptr);
        if (fd >= 0) {
            return TcpChannel(fd);
        }
        if (errno != EINTR) {
            throw_errno("accept");
        }
    }
}

}  // namespace qhe
