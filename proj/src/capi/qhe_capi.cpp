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

#include "qhe/qhe.h"

#include <unistd.h>

#include <cstdlib>
#include <cstring>
#include <string>

#include "delegation/demo.hpp"
#include "delegation/formats.hpp"
#include "pauli/pauli.hpp"
#include "scheme/scheme.hpp"
#include "util/error.hpp"
#include "verification/bounds.hpp"
#include "verification/checks.hpp"
#include "verification/report.hpp"

struct qhe_key {
    qhe::SecretKey value;
};
struct qhe_state {
    qhe::DensityMatrix value;
};
struct qhe_circuit {
    qhe::IqpCircuit value;
};
struct qhe_ciphertext {
    qhe::Ciphertext value;
};

namespace {

thread_local std::string g_last_error;

qhe_status status_of(qhe::ErrorCode code) {
    switch (code) {
        case qhe::ErrorCode::kInvalidArgument:
            return QHE_ERR_INVALID_ARGUMENT;
        case qhe::ErrorCode::kParse:
            return QHE_ERR_PARSE;
        case qhe::ErrorCode::kNotIqp:
            return QHE_ERR_NOT_IQP;
        case qhe::ErrorCode::kParamsMismatch:
            return QHE_ERR_PARAMS_MISMATCH;
        case qhe::ErrorCode::kRemeasure:
            return QHE_ERR_REMEASURE;
        case qhe::ErrorCode::kDimension:
            return QHE_ERR_DIMENSION;
        case qhe::ErrorCode::kInfeasible:
            return QHE_ERR_INFEASIBLE;
        case qhe::ErrorCode::kIo:
            return QHE_ERR_IO;
        case qhe::ErrorCode::kTransport:
            return QHE_ERR_TRANSPORT;
    }
    return QHE_ERR_INTERNAL;
}

/// Runs `body`, translating exceptions into status codes.
template <typename F>
qhe_status guarded(F &&body) {
    try {
        g_last_error.clear();
        body();
        return QHE_OK;
    } catch (const qhe::Error &e) {
        g_last_error = e.what();
        return status_of(e.code());
    } catch (const std::bad_alloc &) {
        g_last_error = "out of memory";
        return QHE_ERR_INTERNAL;
    } catch (const std::exception &e) {
        g_last_error = e.what();
        return QHE_ERR_INTERNAL;
    }
}

void require(bool condition, const char *what) {
    if (!condition) {
        throw qhe::Error(qhe::ErrorCode::kInvalidArgument, what);
    }
}

char *copy_string(const std::string &s) {
    char *out = static_cast<char *>(std::malloc(s.size() + 1));
    if (out == nullptr) {
        throw std::bad_alloc();
    }
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

qhe::DensityMatrix single_qubit_label(char label) {
    switch (label) {
        case '0':
            return qhe::states::zero();
        case '1':
            return qhe::states::one();
        case '+':
            return qhe::states::plus();
        case '-':
            return qhe::states::minus();
        case 'r':
            return qhe::states::from_bloch(0, 1, 0);
        case 'l':
            return qhe::states::from_bloch(0, -1, 0);
    }
    throw qhe::Error(qhe::ErrorCode::kParse, std::string("unknown state label '") + label + "'");
}

}  // namespace

extern "C" {

const char *qhe_last_error(void) {
    return g_last_error.c_str();
}

const char *qhe_status_string(qhe_status status) {
    switch (status) {
        case QHE_OK:
            return "ok";
        case QHE_ERR_INVALID_ARGUMENT:
            return "invalid argument";
        case QHE_ERR_PARSE:
            return "parse error";
        case QHE_ERR_NOT_IQP:
            return "circuit is not IQP";
        case QHE_ERR_PARAMS_MISMATCH:
            return "parameter mismatch";
        case QHE_ERR_REMEASURE:
            return "register already measured";
        case QHE_ERR_DIMENSION:
            return "dimension error";
        case QHE_ERR_INFEASIBLE:
            return "infeasible parameters";
        case QHE_ERR_IO:
            return "I/O error";
        case QHE_ERR_TRANSPORT:
            return "transport error";
        case QHE_ERR_INTERNAL:
            return "internal error";
    }
    return "unknown status";
}

void qhe_string_free(char *s) {
    std::free(s);
}

qhe_status qhe_key_generate(int kappa, int n_max, int k, uint64_t seed, qhe_key **out) {
    return guarded([&] {
        require(out != nullptr, "null output");
        qhe::SchemeParams params = qhe::SchemeParams::with_default_k(kappa, n_max);
        if (k != 0) {
            params.k = k;
        }
        *out = new qhe_key{qhe::keygen(params, seed)};
    });
}

qhe_status qhe_key_parse(const char *text, qhe_key **out) {
    return guarded([&] {
        require(text != nullptr && out != nullptr, "null argument");
        *out = new qhe_key{qhe::parse_key(text)};
    });
}

qhe_status qhe_key_serialize(const qhe_key *key, char **out) {
    return guarded([&] {
        require(key != nullptr && out != nullptr, "null argument");
        *out = copy_string(qhe::serialize_key(key->value));
    });
}

size_t qhe_key_bits(const qhe_key *key) {
    return key == nullptr ? 0 : key->value.bits();
}

void qhe_key_free(qhe_key *key) {
    delete key;
}

qhe_status qhe_state_parse(const char *text, qhe_state **out) {
    return guarded([&] {
        require(text != nullptr && out != nullptr, "null argument");
        *out = new qhe_state{qhe::parse_state(text)};
    });
}

qhe_status qhe_state_serialize(const qhe_state *state, char **out) {
    return guarded([&] {
        require(state != nullptr && out != nullptr, "null argument");
        *out = copy_string(qhe::serialize_state(state->value));
    });
}

qhe_status qhe_state_product(const char *labels, qhe_state **out) {
    return guarded([&] {
        require(labels != nullptr && out != nullptr, "null argument");
        std::vector<qhe::DensityMatrix> factors;
        for (const char *c = labels; *c != '\0'; ++c) {
            factors.push_back(single_qubit_label(*c));
        }
        require(!factors.empty(), "empty state label");
        *out = new qhe_state{qhe::DensityMatrix::product(factors)};
    });
}

int qhe_state_qubits(const qhe_state *state) {
    return state == nullptr ? 0 : state->value.num_qubits();
}

int qhe_state_is_xy(const qhe_state *state) {
    return state != nullptr && qhe::is_xy_state(state->value) ? 1 : 0;
}

qhe_status qhe_state_trace_distance(const qhe_state *a, const qhe_state *b, double *out) {
    return guarded([&] {
        require(a != nullptr && b != nullptr && out != nullptr, "null argument");
        *out = qhe::trace_distance(a->value, b->value);
    });
}

void qhe_state_free(qhe_state *state) {
    delete state;
}

qhe_status qhe_circuit_parse(const char *text, qhe_circuit **out) {
    return guarded([&] {
        require(text != nullptr && out != nullptr, "null argument");
        *out = new qhe_circuit{qhe::parse_circuit(text)};
    });
}

qhe_status qhe_circuit_serialize(const qhe_circuit *circuit, char **out) {
    return guarded([&] {
        require(circuit != nullptr && out != nullptr, "null argument");
        *out = copy_string(qhe::serialize_circuit(circuit->value));
    });
}

int qhe_circuit_qubits(const qhe_circuit *circuit) {
    return circuit == nullptr ? 0 : circuit->value.num_qubits();
}

void qhe_circuit_free(qhe_circuit *circuit) {
    delete circuit;
}

qhe_status qhe_circuit_run(const qhe_circuit *circuit, const qhe_state *state, char **out_json) {
    return guarded([&] {
        require(circuit != nullptr && state != nullptr && out_json != nullptr, "null argument");
        const auto run = qhe::run_circuit(state->value, circuit->value);
        nlohmann::json outcomes = nlohmann::json::object();
        for (const auto &b : run.branches) {
            outcomes[qhe::format_outcome(b.outcome, circuit->value.measured().size())] = b.probability;
        }
        *out_json = copy_string(qhe::canonical_dump({{"measured", circuit->value.measured()},
                                                     {"outcomes", outcomes},
                                                     {"circuit", qhe::describe_circuit(circuit->value)}}));
    });
}

qhe_status qhe_ciphertext_parse(const char *text, qhe_ciphertext **out) {
    return guarded([&] {
        require(text != nullptr && out != nullptr, "null argument");
        *out = new qhe_ciphertext{qhe::parse_ciphertext(text)};
    });
}

qhe_status qhe_ciphertext_serialize(const qhe_ciphertext *ct, char **out) {
    return guarded([&] {
        require(ct != nullptr && out != nullptr, "null argument");
        *out = copy_string(qhe::serialize_ciphertext(ct->value));
    });
}

int qhe_ciphertext_qubits(const qhe_ciphertext *ct) {
    return ct == nullptr ? 0 : ct->value.num_qubits();
}

void qhe_ciphertext_free(qhe_ciphertext *ct) {
    delete ct;
}

qhe_status qhe_encrypt(const qhe_key *key, const qhe_state *state, uint64_t seed, qhe_ciphertext **out,
                       int *outside_xy) {
    return guarded([&] {
        require(key != nullptr && state != nullptr && out != nullptr, "null argument");
        qhe::Rng rng(seed);
        auto ct = qhe::encrypt(key->value, state->value, rng);
        if (outside_xy != nullptr) {
            *outside_xy = qhe::plaintext_in_xy_space(state->value) ? 0 : 1;
        }
        *out = new qhe_ciphertext{std::move(ct)};
    });
}

qhe_status qhe_evaluate(const qhe_circuit *circuit, const qhe_ciphertext *ct, uint64_t seed, qhe_ciphertext **out) {
    return guarded([&] {
        require(circuit != nullptr && ct != nullptr && out != nullptr, "null argument");
        qhe::Rng rng(seed);
        *out = new qhe_ciphertext{qhe::evaluate(circuit->value, ct->value, rng)};
    });
}

qhe_status qhe_decrypt(const qhe_key *key, const qhe_ciphertext *ct, int *bits, size_t bits_len,
                       qhe_state **out_state) {
    return guarded([&] {
        require(key != nullptr && ct != nullptr, "null argument");
        const auto n = static_cast<size_t>(ct->value.num_qubits());
        require(bits == nullptr || bits_len >= n, "bits buffer shorter than the qubit count");
        auto pt = qhe::decrypt(key->value, ct->value);
        if (bits != nullptr) {
            for (size_t q = 0; q < n; ++q) {
                bits[q] = pt.bits[q] ? static_cast<int>(*pt.bits[q]) : -1;
            }
        }
        if (out_state != nullptr) {
            *out_state = new qhe_state{std::move(pt.state)};
        }
    });
}

qhe_status qhe_binary_entropy(double p, double *out) {
    return guarded([&] {
        require(out != nullptr, "null output");
        *out = qhe::binary_entropy(p);
    });
}

qhe_status qhe_qpir_lower_bound(double n, double delta, double epsilon, double *out) {
    return guarded([&] {
        require(out != nullptr, "null output");
        *out = qhe::qpir_lower_bound({n, delta, epsilon});
    });
}

qhe_status qhe_amplify_weak_to_strong(double eps_weak, int n_max, double *out) {
    return guarded([&] {
        require(out != nullptr, "null output");
        *out = qhe::amplify_weak_to_strong(eps_weak, n_max);
    });
}

qhe_status qhe_collision_bound(int kappa, int n_max, double *out) {
    return guarded([&] {
        require(out != nullptr, "null output");
        const auto params = qhe::SchemeParams::with_default_k(kappa, n_max);
        params.validate();
        *out = qhe::collision_bound(params);
    });
}

qhe_status qhe_verify_correctness(int cases, int max_qubits, int max_gates, int kappa, int k, uint64_t seed,
                                  double tolerance, char **report, int *passed) {
    return guarded([&] {
        require(report != nullptr && passed != nullptr, "null output");
        qhe::CorrectnessSuiteOptions options;
        options.cases = cases;
        options.max_qubits = max_qubits;
        options.max_gates = max_gates;
        options.kappa = kappa;
        options.k = k;
        options.seed = seed;
        const auto result = qhe::run_correctness_suite(options);
        const auto j = qhe::correctness_report(options, result, tolerance);
        *passed = j["passed"].get<bool>() ? 1 : 0;
        *report = copy_string(qhe::canonical_dump(j));
    });
}

qhe_status qhe_verify_security(int kappa, int n_max, int k, int pairs, const char *mode, uint64_t seed,
                               double tolerance, char **report, int *passed) {
    return guarded([&] {
        require(mode != nullptr && report != nullptr && passed != nullptr, "null argument");
        qhe::SecuritySuiteOptions options;
        options.params = qhe::SchemeParams::with_default_k(kappa, n_max);
        if (k != 0) {
            options.params.k = k;
        }
        options.pairs = pairs;
        options.seed = seed;
        const std::string m = mode;
        if (m == "exact") {
            options.mode = qhe::SecurityMode::kExact;
        } else if (m == "analytic") {
            options.mode = qhe::SecurityMode::kAnalytic;
        } else {
            throw qhe::Error(qhe::ErrorCode::kInvalidArgument, "security mode must be exact or analytic");
        }
        const auto result = qhe::run_security_suite(options);
        const auto j = qhe::security_report(options, result, tolerance);
        *passed = j["passed"].get<bool>() ? 1 : 0;
        *report = copy_string(qhe::canonical_dump(j));
    });
}

qhe_status qhe_verify_bounds(double delta, double epsilon, int p_max, char **report, int *passed) {
    return guarded([&] {
        require(report != nullptr && passed != nullptr, "null output");
        require(p_max >= 1, "p_max must be at least 1");
        qhe::BoundsOptions options;
        options.delta = delta;
        options.epsilon = epsilon;
        options.p_max = p_max;
        const auto j = qhe::bounds_report(options);
        *passed = j["passed"].get<bool>() ? 1 : 0;
        *report = copy_string(qhe::canonical_dump(j));
    });
}

qhe_status qhe_serve(int port, int sessions, uint64_t seed, int ready_fd) {
    return guarded([&] {
        require(sessions >= 1, "at least one session");
        qhe::serve_tcp(port, sessions, seed, [ready_fd](int bound) {
            if (ready_fd >= 0) {
                const std::string line = std::to_string(bound) + "\n";
                if (::write(ready_fd, line.data(), line.size()) < 0) {
                    throw qhe::Error(qhe::ErrorCode::kIo, "could not report the bound port");
                }
            }
        });
    });
}

qhe_status qhe_demo(const char *transport, int port, const char *circuit_text, int runs, uint64_t seed, int kappa,
                    char **transcript_json, double *total_variation, int *audit_clean) {
    return guarded([&] {
        require(transport != nullptr && circuit_text != nullptr, "null argument");
        qhe::DemoOptions options;
        const std::string t = transport;
        if (t == "inproc") {
            options.transport = qhe::Transport::kInProcess;
        } else if (t == "socket") {
            options.transport = qhe::Transport::kLocalSocket;
        } else {
            throw qhe::Error(qhe::ErrorCode::kInvalidArgument, "transport must be inproc or socket");
        }
        options.port = port;
        options.circuit_text = circuit_text;
        options.runs = runs;
        options.seed = seed;
        options.kappa = kappa;
        const auto result = qhe::run_delegation_demo(options);
        if (transcript_json != nullptr) {
            *transcript_json = copy_string(qhe::canonical_dump(qhe::demo_transcript_json(result)));
        }
        if (total_variation != nullptr) {
            *total_variation = result.total_variation;
        }
        if (audit_clean != nullptr) {
            *audit_clean = result.audit.clean ? 1 : 0;
        }
        if (result.server_error) {
            throw qhe::Error(qhe::ErrorCode::kNotIqp, "server rejected the request: " + *result.server_error);
        }
    });
}

}  // extern "C"
