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

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "delegation/formats.hpp"
#include "delegation/framing.hpp"
#include "verification/generators.hpp"

using namespace qhe;

namespace {

std::string fixture(const std::string &name) {
    std::ifstream in(std::string(QHE_FIXTURE_DIR) + "/" + name, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ErrorCode parse_code(const std::function<void()> &f) {
    try {
        f();
    } catch (const Error &e) {
        return e.code();
    }
    ADD_FAILURE() << "no error raised";
    return ErrorCode::kInvalidArgument;
}

}  // namespace

TEST(formats, fixtures_round_trip_byte_exact) {
    for (const char *name : {"plus_plus.state.json"}) {
        const auto text = fixture(name);
        EXPECT_EQ(serialize_state(parse_state(text)), text) << name;
    }
    for (const char *name : {"t_cz.circuit.json", "diag.circuit.json"}) {
        const auto text = fixture(name);
        EXPECT_EQ(serialize_circuit(parse_circuit(text)), text) << name;
    }
    for (const char *name : {"plus_plus.ct.json", "t_cz.evaluated.ct.json"}) {
        const auto text = fixture(name);
        EXPECT_EQ(serialize_ciphertext(parse_ciphertext(text)), text) << name;
    }
    const auto key = fixture("k3n2.key.json");
    EXPECT_EQ(serialize_key(parse_key(key)), key);
}

TEST(formats, fixture_contents) {
    const auto circuit = parse_circuit(fixture("t_cz.circuit.json"));
    EXPECT_EQ(circuit.num_qubits(), 2);
    EXPECT_EQ(circuit.gates()[0].name(), "T");
    EXPECT_EQ(circuit.measured(), (std::vector<int>{0, 1}));
    const auto key = parse_key(fixture("k3n2.key.json"));
    EXPECT_EQ(key.bits(), 9u);
    EXPECT_EQ(key.params, (SchemeParams{3, 2, 3}));
    const auto ct = parse_ciphertext(fixture("plus_plus.ct.json"));
    EXPECT_EQ(ct.params(), key.params);
    EXPECT_LT((decrypt(key, ct).state.matrix() - states::plus_n(2).matrix()).norm(), 1e-12);
    EXPECT_NE(fixture("plus_plus.ct.json").find("\"simulation_only\": true"), std::string::npos);
}

TEST(formats, non_iqp_fixture) {
    const auto spec = parse_circuit_spec(fixture("hadamard.circuit.json"));
    EXPECT_EQ(spec.gates.size(), 2u);
    try {
        parse_circuit(fixture("hadamard.circuit.json"));
        FAIL();
    } catch (const NotIqpError &e) {
        EXPECT_EQ(e.gate_index(), std::optional<std::size_t>(1));
    }
}

TEST(formats, random_round_trips) {
    Rng rng(3);
    for (int t = 0; t < 20; ++t) {
        const int n = 1 + static_cast<int>(rng.next() % 4);
        const auto key = keygen(SchemeParams::with_default_k(1 + static_cast<int>(rng.next() % 20), n), rng);
        const auto key_text = serialize_key(key);
        EXPECT_EQ(serialize_key(parse_key(key_text)), key_text);
        EXPECT_EQ(parse_key(key_text).hash, key.hash);

        const auto rho = random_density_matrix(n, rng);
        const auto state_text = serialize_state(rho);
        EXPECT_EQ(serialize_state(parse_state(state_text)), state_text);
        EXPECT_EQ(parse_state(state_text).matrix(), rho.matrix());

        const auto circuit = random_iqp_circuit(n, 10, rng);
        const auto circuit_text = serialize_circuit(circuit);
        EXPECT_EQ(serialize_circuit(parse_circuit(circuit_text)), circuit_text);

        const auto ct = evaluate(circuit, encrypt(key, rho, rng), rng);
        const auto ct_text = serialize_ciphertext(ct);
        const auto back = parse_ciphertext(ct_text);
        EXPECT_EQ(serialize_ciphertext(back), ct_text);
        EXPECT_EQ(back.randomness(), ct.randomness());
        EXPECT_EQ(back.registers(), ct.registers());
        EXPECT_EQ(back.share().matrix(), ct.share().matrix());
    }
}

TEST(formats, randomness_is_kappa_bits_in_hex) {
    const auto key = keygen(SchemeParams{5, 1, 5}, 1);
    const auto ct = encrypt_with_randomness(key, states::plus(), std::vector<std::uint32_t>{0x13});
    const auto text = serialize_ciphertext(ct);
    EXPECT_NE(text.find("\"13\""), std::string::npos);
    auto tampered = text;
    tampered.replace(tampered.find("\"13\""), 4, "\"33\"");
    EXPECT_THROW(parse_ciphertext(tampered), Error);
}

TEST(formats, rejects_bad_documents) {
    EXPECT_EQ(parse_code([] { parse_json("{not json"); }), ErrorCode::kParse);
    const auto state = fixture("plus_plus.state.json");
    auto wrong_version = state;
    wrong_version.replace(wrong_version.find("\"version\": 1"), 12, "\"version\": 2");
    EXPECT_EQ(parse_code([&] { parse_state(wrong_version); }), ErrorCode::kParse);
    EXPECT_EQ(parse_code([&] { parse_circuit(state); }), ErrorCode::kParse);

    auto unsafe = fixture("plus_plus.ct.json");
    unsafe.replace(unsafe.find("\"simulation_only\": true"), 23, "\"simulation_only\": false");
    EXPECT_EQ(parse_code([&] { parse_ciphertext(unsafe); }), ErrorCode::kParse);

    // |0><0| with trace 2 fails the density-matrix invariants on load.
    const std::string bad_trace =
        R"({"format": "qhe-state", "version": 1, "qubits": 1, "matrix": [[2.0, 0.0], [0.0, 0.0], [0.0, 0.0], [0.0, 0.0]]})";
    EXPECT_THROW(parse_state(bad_trace), Error);
    const std::string short_matrix = R"({"format": "qhe-state", "version": 1, "qubits": 1, "matrix": [[1.0, 0.0]]})";
    EXPECT_THROW(parse_state(short_matrix), Error);
}

TEST(formats, error_documents) {
    const auto text = serialize_error("not_iqp", "gate 0 (H) is not diagonal");
    std::string code;
    std::string message;
    ASSERT_TRUE(parse_error(text, code, message));
    EXPECT_EQ(code, "not_iqp");
    EXPECT_EQ(message, "gate 0 (H) is not diagonal");
    EXPECT_FALSE(parse_error(fixture("plus_plus.ct.json"), code, message));
}

TEST(framing, big_endian_length_prefix) {
    const auto frame = encode_frame("abc");
    ASSERT_EQ(frame.size(), 7u);
    EXPECT_EQ(frame.substr(0, 4), std::string("\0\0\0\3", 4));
    const std::string big(300, 'x');
    const auto f2 = encode_frame(big);
    EXPECT_EQ(static_cast<unsigned char>(f2[2]), 1);
    EXPECT_EQ(static_cast<unsigned char>(f2[3]), 44);
}

TEST(framing, decoder_handles_split_and_batched_input) {
    const std::string stream = encode_frame("first") + encode_frame("") + encode_frame("third");
    FrameDecoder byte_by_byte;
    std::vector<std::string> got;
    for (char c : stream) {
        byte_by_byte.feed(std::string_view(&c, 1));
        while (auto p = byte_by_byte.next()) {
            got.push_back(*p);
        }
    }
    EXPECT_EQ(got, (std::vector<std::string>{"first", "", "third"}));
    EXPECT_EQ(byte_by_byte.pending(), 0u);

    FrameDecoder batched;
    batched.feed(stream.substr(0, 11));
    EXPECT_EQ(batched.next(), std::optional<std::string>("first"));
    EXPECT_FALSE(batched.next().has_value());
    EXPECT_EQ(batched.pending(), 2u);
}

TEST(framing, oversized_header_is_malformed) {
    FrameDecoder d;
    d.feed(std::string("\xff\xff\xff\xff", 4));
    EXPECT_THROW(d.next(), Error);
}
