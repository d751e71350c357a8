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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "delegation/transport.hpp"
#include "json.hpp"
#include "scheme/scheme.hpp"

namespace qhe {

/// The evaluating party. It is handed circuit and ciphertext bytes only;
/// there is no code path that gives it a SecretKey.
class EvaluationServer {
   public:
    explicit EvaluationServer(std::uint64_t seed) : rng_(seed) {
    }

    /// One request: validates the circuit (rejecting non-IQP input before any
    /// evaluation), evaluates, and returns the evaluated ciphertext file or a
    /// qhe-error document.
    std::string handle(const std::string &circuit_bytes, const std::string &ciphertext_bytes);

    /// Serves (circuit, ciphertext) request pairs until the peer closes or,
    /// for in-process channels, until no complete pair is queued. Returns the
    /// number of requests answered.
    int serve(Channel &channel);

    int requests_handled() const {
        return handled_;
    }
    int requests_rejected() const {
        return rejected_;
    }

   private:
    Rng rng_;
    int handled_ = 0;
    int rejected_ = 0;
};

/// Accepts `sessions` loopback connections one after another and serves each.
/// `on_ready` receives the bound port before the first accept.
void serve_tcp(int port, int sessions, std::uint64_t seed, const std::function<void(int)> &on_ready = {});

enum class Transport { kInProcess, kLocalSocket };

struct DemoOptions {
    Transport transport = Transport::kInProcess;
    int port = 0;
    /// CircuitFile text, sent to the server as is.
    std::string circuit_text;
    int runs = 1000;
    std::uint64_t seed = 1;
    int kappa = 8;
};

struct WireRecord {
    bool client_to_server = true;
    /// Full framed bytes, length prefix included.
    std::string bytes;
};

struct WireAudit {
    bool clean = true;
    /// Occurrences of key material (hex text, packed bytes or the key file).
    std::size_t occurrences = 0;
};

/// Searches every recorded byte for the key's material in each of its
/// encodings.
WireAudit audit_transcript(const std::vector<WireRecord> &transcript, const SecretKey &key);

struct DemoResult {
    int runs = 0;
    std::string circuit_description;
    /// Decrypted outcome counts over the measured qubits.
    std::map<std::uint64_t, int> histogram;
    /// Exact plaintext outcome distribution (local simulation).
    std::map<std::uint64_t, double> exact;
    double total_variation = 0;
    std::vector<WireRecord> transcript;
    std::size_t bytes_to_server = 0;
    std::size_t bytes_to_client = 0;
    WireAudit audit;
    /// Set when the server refused the request.
    std::optional<std::string> server_error;
    std::size_t measured_count = 0;
};

/// Client side: keygen and encryption of |+>^n, one (circuit, ciphertext)
/// exchange per run, decryption of each returned ciphertext.
DemoResult run_delegation_demo(const DemoOptions &options);

/// Summary plus the full frame log.
nlohmann::json demo_transcript_json(const DemoResult &result);

}  // namespace qhe
