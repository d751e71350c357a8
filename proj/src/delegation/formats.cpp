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

#include "delegation/formats.hpp"

#include "util/error.hpp"

namespace qhe {

using nlohmann::json;

namespace {

void require_format(const json &j, const char *format) {
    if (!j.is_object() || !j.contains("format") || j["format"] != format) {
        throw Error(ErrorCode::kParse, std::string("expected a ") + format + " document");
    }
    if (!j.contains("version") || j["version"] != kFormatVersion) {
        throw Error(ErrorCode::kParse, std::string(format) + " has an unsupported version");
    }
}

template <typename T>
T field(const json &j, const char *name) {
    if (!j.contains(name)) {
        throw Error(ErrorCode::kParse, std::string("missing field '") + name + "'");
    }
    try {
        return j.at(name).get<T>();
    } catch (const json::exception &e) {
        throw Error(ErrorCode::kParse, std::string("bad field '") + name + "': " + e.what());
    }
}

json complex_json(Complex c) {
    // Adding 0.0 folds -0.0 into +0.0 so the canonical text has one spelling.
    return json::array({c.real() + 0.0, c.imag() + 0.0});
}

Complex complex_from(const json &j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw Error(ErrorCode::kParse, "complex numbers are [re, im] pairs");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

json matrix_json(const ComplexMatrix &m) {
    json flat = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            flat.push_back(complex_json(m(i, j)));
        }
    }
    return flat;
}

/// Row-major flat list of [re, im] pairs.
ComplexMatrix matrix_from(const json &flat, int qubits) {
    check_qubit_count(qubits);
    const auto dim = static_cast<Eigen::Index>(dimension_of(qubits));
    if (!flat.is_array() || flat.size() != static_cast<std::size_t>(dim * dim)) {
        throw Error(ErrorCode::kParse, "matrix must hold 4^qubits entries");
    }
    ComplexMatrix m(dim, dim);
    std::size_t pos = 0;
    for (Eigen::Index i = 0; i < dim; ++i) {
        for (Eigen::Index j = 0; j < dim; ++j) {
            m(i, j) = complex_from(flat[pos++]);
        }
    }
    return m;
}

json state_body(const DensityMatrix &rho) {
    return {{"qubits", rho.num_qubits()}, {"matrix", matrix_json(rho.matrix())}};
}

DensityMatrix state_from_body(const json &j) {
    const int qubits = field<int>(j, "qubits");
    return DensityMatrix(matrix_from(j.at("matrix"), qubits));
}

json params_to_json(const SchemeParams &p) {
    return {{"kappa", p.kappa}, {"n_max", p.max_qubits}, {"k", p.k}};
}

SchemeParams params_from(const json &j) {
    if (!j.is_object()) {
        throw Error(ErrorCode::kParse, "params must be an object");
    }
    SchemeParams p{field<int>(j, "kappa"), field<int>(j, "n_max"), field<int>(j, "k")};
    try {
        p.validate();
    } catch (const Error &e) {
        throw Error(ErrorCode::kParse, std::string("invalid params: ") + e.what());
    }
    return p;
}

std::string hex_of(std::uint32_t value, int bits) {
    static const char *kDigits = "0123456789abcdef";
    const int digits = (bits + 3) / 4;
    std::string out(static_cast<std::size_t>(digits), '0');
    for (int i = digits - 1; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = kDigits[value & 0xF];
        value >>= 4;
    }
    return out;
}

std::uint32_t value_of_hex(const std::string &hex, int bits) {
    if (hex.size() != static_cast<std::size_t>((bits + 3) / 4)) {
        throw Error(ErrorCode::kParse, "randomness '" + hex + "' is not " + std::to_string(bits) + " bits of hex");
    }
    std::uint64_t value = 0;
    for (char ch : hex) {
        int v;
        if (ch >= '0' && ch <= '9') {
            v = ch - '0';
        } else if (ch >= 'a' && ch <= 'f') {
            v = ch - 'a' + 10;
        } else {
            throw Error(ErrorCode::kParse, "randomness is not lowercase hex");
        }
        value = (value << 4) | static_cast<std::uint64_t>(v);
    }
    if (value >> bits) {
        throw Error(ErrorCode::kParse, "randomness longer than kappa bits");
    }
    return static_cast<std::uint32_t>(value);
}

}  // namespace

json parse_json(const std::string &text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        throw Error(ErrorCode::kParse, std::string("malformed JSON: ") + e.what());
    }
}

std::string canonical_dump(const json &j) {
    return j.dump(2) + "\n";
}

std::string serialize_key(const SecretKey &key) {
    return canonical_dump({{"format", "qhe-key"},
                           {"version", kFormatVersion},
                           {"params", params_to_json(key.params)},
                           {"bits", key.bits()},
                           {"material", key.hash.to_hex()}});
}

SecretKey parse_key(const std::string &text) {
    const json j = parse_json(text);
    require_format(j, "qhe-key");
    const SchemeParams params = params_from(j.at("params"));
    if (field<std::size_t>(j, "bits") != static_cast<std::size_t>(params.k * params.kappa)) {
        throw Error(ErrorCode::kParse, "key bit count disagrees with k * kappa");
    }
    return {params, HashFunction::from_hex(params.kappa, params.k, field<std::string>(j, "material"))};
}

std::string serialize_state(const DensityMatrix &rho) {
    json j = state_body(rho);
    j["format"] = "qhe-state";
    j["version"] = kFormatVersion;
    return canonical_dump(j);
}

DensityMatrix parse_state(const std::string &text) {
    const json j = parse_json(text);
    require_format(j, "qhe-state");
    return state_from_body(j);
}

std::string serialize_circuit(const IqpCircuit &circuit) {
    json gates = json::array();
    for (const auto &g : circuit.gates()) {
        json entry = {{"name", g.name()}, {"qubits", g.support()}};
        if (g.name() == "DIAG") {
            json phases = json::array();
            for (const auto &p : g.phases()) {
                phases.push_back(complex_json(p));
            }
            entry["phases"] = phases;
        }
        gates.push_back(entry);
    }
    return canonical_dump({{"format", "qhe-circuit"},
                           {"version", kFormatVersion},
                           {"qubits", circuit.num_qubits()},
                           {"gates", gates},
                           {"measured", circuit.measured()}});
}

CircuitSpec parse_circuit_spec(const std::string &text) {
    const json j = parse_json(text);
    require_format(j, "qhe-circuit");
    CircuitSpec spec;
    spec.num_qubits = field<int>(j, "qubits");
    spec.measured = field<std::vector<int>>(j, "measured");
    const json &gates = j.at("gates");
    if (!gates.is_array()) {
        throw Error(ErrorCode::kParse, "gates must be a list");
    }
    for (const auto &g : gates) {
        GateSpec gate;
        gate.name = field<std::string>(g, "name");
        gate.qubits = field<std::vector<int>>(g, "qubits");
        if (g.contains("phases")) {
            for (const auto &p : g.at("phases")) {
                gate.phases.push_back(complex_from(p));
            }
        }
        if (g.contains("matrix")) {
            const json &rows = g.at("matrix");
            if (!rows.is_array() || rows.empty()) {
                throw Error(ErrorCode::kParse, "MATRIX gate needs a list of rows");
            }
            ComplexMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.size()));
            for (std::size_t r = 0; r < rows.size(); ++r) {
                if (!rows[r].is_array() || rows[r].size() != rows.size()) {
                    throw Error(ErrorCode::kParse, "MATRIX gate must be square");
                }
                for (std::size_t c = 0; c < rows.size(); ++c) {
                    m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = complex_from(rows[r][c]);
                }
            }
            gate.matrix = std::move(m);
        }
        spec.gates.push_back(std::move(gate));
    }
    return spec;
}

IqpCircuit parse_circuit(const std::string &text) {
    return validate_iqp(parse_circuit_spec(text));
}

std::string serialize_ciphertext(const Ciphertext &ct) {
    json randomness = json::array();
    json registers = json::array();
    for (int q = 0; q < ct.num_qubits(); ++q) {
        randomness.push_back(hex_of(ct.randomness()[static_cast<std::size_t>(q)], ct.params().kappa));
        const Register &reg = ct.registers()[static_cast<std::size_t>(q)];
        registers.push_back(reg ? json(static_cast<int>(*reg)) : json(nullptr));
    }
    return canonical_dump({{"format", "qhe-ciphertext"},
                           {"version", kFormatVersion},
                           {"simulation_only", true},
                           {"params", params_to_json(ct.params())},
                           {"qubits", ct.num_qubits()},
                           {"randomness", randomness},
                           {"registers", registers},
                           {"share", state_body(ct.share())}});
}

Ciphertext parse_ciphertext(const std::string &text) {
    const json j = parse_json(text);
    require_format(j, "qhe-ciphertext");
    if (!j.contains("simulation_only") || j["simulation_only"] != true) {
        throw Error(ErrorCode::kParse, "ciphertext must be marked simulation_only");
    }
    const SchemeParams params = params_from(j.at("params"));
    const int qubits = field<int>(j, "qubits");
    const auto hex = field<std::vector<std::string>>(j, "randomness");
    const json &regs = j.at("registers");
    if (static_cast<int>(hex.size()) != qubits || !regs.is_array() || static_cast<int>(regs.size()) != qubits) {
        throw Error(ErrorCode::kParse, "randomness and registers need one entry per qubit");
    }
    std::vector<std::uint32_t> randomness;
    std::vector<Register> registers;
    for (int q = 0; q < qubits; ++q) {
        randomness.push_back(value_of_hex(hex[static_cast<std::size_t>(q)], params.kappa));
        const json &r = regs[static_cast<std::size_t>(q)];
        if (r.is_null()) {
            registers.emplace_back();
        } else if (r.is_number_integer() && (r == 0 || r == 1)) {
            registers.emplace_back(static_cast<std::uint8_t>(r.get<int>()));
        } else {
            throw Error(ErrorCode::kParse, "registers hold null, 0 or 1");
        }
    }
    try {
        return Ciphertext(params, std::move(randomness), std::move(registers), state_from_body(j.at("share")));
    } catch (const Error &e) {
        if (e.code() == ErrorCode::kParse) {
            throw;
        }
        throw Error(ErrorCode::kParse, std::string("invalid ciphertext: ") + e.what());
    }
}

std::string serialize_error(const std::string &code, const std::string &message) {
    return canonical_dump({{"format", "qhe-error"}, {"version", kFormatVersion}, {"code", code}, {"message", message}});
}

bool parse_error(const std::string &text, std::string &code, std::string &message) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error &) {
        return false;
    }
    if (!j.is_object() || !j.contains("format") || j["format"] != "qhe-error") {
        return false;
    }
    code = j.value("code", "");
    message = j.value("message", "");
    return true;
}

}  // namespace qhe
