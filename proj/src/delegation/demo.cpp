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

#include "delegation/demo.hpp"

#include <cmath>

#include "delegation/formats.hpp"
#include "util/error.hpp"
#include "verification/checks.hpp"

namespace qhe {

namespace {

std::string error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::kInvalidArgument:
            return "invalid_argument";
        case ErrorCode::kParse:
            return "parse";
        case ErrorCode::kNotIqp:
            return "not_iqp";
        case ErrorCode::kParamsMismatch:
            return "params_mismatch";
        case ErrorCode::kRemeasure:
            return "remeasure";
        case ErrorCode::kDimension:
            return "dimension";
        case ErrorCode::kInfeasible:
            return "infeasible";
        case ErrorCode::kIo:
            return "io";
        case ErrorCode::kTransport:
            return "transport";
    }
    return "unknown";
}

std::size_t count_occurrences(const std::string &haystack, const std::string &needle) {
    if (needle.empty()) {
        return 0;
    }
    std::size_t count = 0;
    for (auto pos = haystack.find(needle); pos != std::string::npos; pos = haystack.find(needle, pos + 1)) {
        ++count;
    }
    return count;
}

std::string packed_key_bytes(const SecretKey &key) {
    const auto bits = key.hash.serialized_bits();
    std::string out((bits.size() + 7) / 8, '\0');
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i]) {
            out[i / 8] = static_cast<char>(out[i / 8] | (0x80 >> (i % 8)));
        }
    }
    return out;
}

}  // namespace

std::string EvaluationServer::handle(const std::string &circuit_bytes, const std::string &ciphertext_bytes) {
    try {
        const IqpCircuit circuit = parse_circuit(circuit_bytes);
        const Ciphertext ct = parse_ciphertext(ciphertext_bytes);
        const Ciphertext out = evaluate(circuit, ct, rng_);
        ++handled_;
        return serialize_ciphertext(out);
    } catch (const Error &e) {
        ++rejected_;
        return serialize_error(error_code_name(e.code()), e.what());
    }
}

int EvaluationServer::serve(Channel &channel) {
    int answered = 0;
    while (true) {
        auto circuit = channel.receive();
        if (!circuit) {
            return answered;
        }
        auto ciphertext = channel.receive();
        if (!ciphertext) {
            throw Error(ErrorCode::kTransport, "request ended after the circuit frame");
        }
        channel.send(handle(*circuit, *ciphertext));
        ++answered;
    }
}

void serve_tcp(int port, int sessions, std::uint64_t seed, const std::function<void(int)> &on_ready) {
    TcpListener listener(port);
    if (on_ready) {
        on_ready(listener.port());
    }
    EvaluationServer server(seed);
    for (int s = 0; s < sessions; ++s) {
        TcpChannel channel = listener.accept();
        try {
            server.serve(channel);
        } catch (const Error &) {
            // A broken session does not stop the server.
        }
    }
}

WireAudit audit_transcript(const std::vector<WireRecord> &transcript, const SecretKey &key) {
    std::string all;
    for (const auto &record : transcript) {
        all += record.bytes;
    }
    WireAudit audit;
    audit.occurrences = count_occurrences(all, key.hash.to_hex()) + count_occurrences(all, packed_key_bytes(key)) +
                        count_occurrences(all, serialize_key(key));
    audit.clean = audit.occurrences == 0;
    return audit;
}

DemoResult run_delegation_demo(const DemoOptions &options) {
    if (options.runs < 1) {
        throw Error(ErrorCode::kInvalidArgument, "demo needs at least one run");
    }
    DemoResult result;
    Rng rng(options.seed);

    // The client cannot know the register size without reading the circuit;
    // it does not validate admissibility, which is the server's job.
    const CircuitSpec spec = parse_circuit_spec(options.circuit_text);
    const int n = spec.num_qubits;
    const SchemeParams params = SchemeParams::with_default_k(options.kappa, n);
    const SecretKey key = keygen(params, rng);
    const DensityMatrix plaintext = states::plus_n(n);

    std::optional<IqpCircuit> local;
    try {
        local = validate_iqp(spec);
    } catch (const NotIqpError &) {
    }
    if (local) {
        result.circuit_description = describe_circuit(*local);
        result.measured_count = local->measured().size();
        for (const auto &b : run_circuit(plaintext, *local).branches) {
            result.exact[b.outcome] = b.probability;
        }
    }

    InProcessLink link;
    std::optional<TcpChannel> tcp;
    EvaluationServer in_process_server(options.seed ^ 0x5eed5eedULL);
    if (options.transport == Transport::kLocalSocket) {
        tcp.emplace(TcpChannel::connect_loopback(options.port));
    }
    Channel &channel = tcp ? static_cast<Channel &>(*tcp) : link.client_end();

    auto record = [&](bool to_server, const std::string &payload) {
        result.transcript.push_back({to_server, encode_frame(payload)});
        (to_server ? result.bytes_to_server : result.bytes_to_client) += payload.size() + 4;
    };

    for (int run = 0; run < options.runs; ++run) {
        const Ciphertext ct = encrypt(key, plaintext, rng);
        const std::string ct_bytes = serialize_ciphertext(ct);
        channel.send(options.circuit_text);
        record(true, options.circuit_text);
        channel.send(ct_bytes);
        record(true, ct_bytes);
        if (!tcp) {
            in_process_server.serve(link.server_end());
        }
        auto reply = channel.receive();
        if (!reply) {
            throw Error(ErrorCode::kTransport, "server closed the connection without replying");
        }
        record(false, *reply);
        std::string code;
        std::string message;
        if (parse_error(*reply, code, message)) {
            result.server_error = code + ": " + message;
            break;
        }
        const Plaintext pt = decrypt(key, parse_ciphertext(*reply));
        std::uint64_t outcome = 0;
        for (std::size_t q = 0; q < pt.bits.size(); ++q) {
            if (pt.bits[q]) {
                outcome = (outcome << 1) | *pt.bits[q];
            }
        }
        ++result.histogram[outcome];
        ++result.runs;
    }

    if (result.runs > 0) {
        double tv = 0;
        for (const auto &[outcome, p] : result.exact) {
            auto it = result.histogram.find(outcome);
            const double freq = it == result.histogram.end() ? 0.0 : static_cast<double>(it->second) / result.runs;
            tv += std::abs(freq - p);
        }
        for (const auto &[outcome, count] : result.histogram) {
            if (!result.exact.contains(outcome)) {
                tv += static_cast<double>(count) / result.runs;
            }
        }
        result.total_variation = 0.5 * tv;
    }
    result.audit = audit_transcript(result.transcript, key);
    return result;
}

nlohmann::json demo_transcript_json(const DemoResult &result) {
    using nlohmann::json;
    json histogram = json::object();
    for (const auto &[outcome, count] : result.histogram) {
        histogram[format_outcome(outcome, result.measured_count)] = count;
    }
    json exact = json::object();
    for (const auto &[outcome, p] : result.exact) {
        exact[format_outcome(outcome, result.measured_count)] = p;
    }
    json frames = json::array();
    for (const auto &r : result.transcript) {
        frames.push_back({{"direction", r.client_to_server ? "client->server" : "server->client"},
                          {"length", r.bytes.size() - 4},
                          {"payload", r.bytes.substr(4)}});
    }
    json out = {
        {"runs", result.runs},
        {"circuit", result.circuit_description},
        {"histogram", histogram},
        {"exact", exact},
        {"total_variation", result.total_variation},
        {"bytes_to_server", result.bytes_to_server},
        {"bytes_to_client", result.bytes_to_client},
        {"key_audit", {{"clean", result.audit.clean}, {"occurrences", result.audit.occurrences}}},
        {"frames", frames},
    };
    out["server_error"] = result.server_error ? json(*result.server_error) : json(nullptr);
    return out;
}

}  // namespace qhe
