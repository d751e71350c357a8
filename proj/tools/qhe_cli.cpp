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

// Command-line front end. Links only the public C API.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qhe/qhe.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitBoundViolation = 3;

struct Failure {
    int exit_code;
    std::string message;
};

void check(qhe_status status, const std::string &context) {
    if (status != QHE_OK) {
        throw Failure{kExitValidation, context + ": " + qhe_status_string(status) + ": " + qhe_last_error()};
    }
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Failure{kExitValidation, "cannot read " + path};
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) {
        throw Failure{kExitValidation, "cannot write " + path};
    }
}

/// Owns a malloc'd string from the library.
class OwnedString {
   public:
    ~OwnedString() {
        qhe_string_free(ptr_);
    }
    char **out() {
        return &ptr_;
    }
    std::string str() const {
        return ptr_ == nullptr ? std::string() : std::string(ptr_);
    }

   private:
    char *ptr_ = nullptr;
};

template <typename T, void (*Free)(T *)>
class Handle {
   public:
    Handle() = default;
    Handle(const Handle &) = delete;
    Handle &operator=(const Handle &) = delete;
    ~Handle() {
        Free(ptr_);
    }
    T **out() {
        return &ptr_;
    }
    T *get() const {
        return ptr_;
    }

   private:
    T *ptr_ = nullptr;
};

using Key = Handle<qhe_key, qhe_key_free>;
using State = Handle<qhe_state, qhe_state_free>;
using Circuit = Handle<qhe_circuit, qhe_circuit_free>;
using CipherText = Handle<qhe_ciphertext, qhe_ciphertext_free>;

void load(Key &key, const std::string &path) {
    check(qhe_key_parse(read_file(path).c_str(), key.out()), path);
}
void load(State &state, const std::string &path) {
    check(qhe_state_parse(read_file(path).c_str(), state.out()), path);
}
void load(Circuit &circuit, const std::string &path) {
    check(qhe_circuit_parse(read_file(path).c_str(), circuit.out()), path);
}
void load(CipherText &ct, const std::string &path) {
    check(qhe_ciphertext_parse(read_file(path).c_str(), ct.out()), path);
}

struct Options {
    std::string product;
    int kappa = 0;
    int n = 0;
    int k = 0;
    std::uint64_t seed = 0;
    std::string key_path;
    std::string state_path;
    std::string circuit_path;
    std::string ct_path;
    std::string out_path;
    std::string mode;
    std::string method = "exact";
    std::string report_path;
    int cases = 200;
    int max_qubits = 4;
    int max_gates = 10;
    int pairs = 20;
    double tolerance = 1e-9;
    double delta = 1e-4;
    double epsilon = 1e-4;
    int p_max = 64;
    int port = 0;
    int sessions = 1;
    std::string transport = "inproc";
    int runs = 1000;
    std::string transcript_path;
};

int cmd_prepare(const Options &o) {
    State state;
    check(qhe_state_product(o.product.c_str(), state.out()), "prepare");
    OwnedString text;
    check(qhe_state_serialize(state.get(), text.out()), "prepare");
    write_file(o.out_path, text.str());
    return kExitOk;
}

int cmd_keygen(const Options &o) {
    Key key;
    check(qhe_key_generate(o.kappa, o.n, o.k, o.seed, key.out()), "keygen");
    OwnedString text;
    check(qhe_key_serialize(key.get(), text.out()), "keygen");
    write_file(o.out_path, text.str());
    std::cout << "key material: " << qhe_key_bits(key.get()) << " bits\n";
    return kExitOk;
}

int cmd_encrypt(const Options &o) {
    Key key;
    State state;
    load(key, o.key_path);
    load(state, o.state_path);
    CipherText ct;
    int outside_xy = 0;
    check(qhe_encrypt(key.get(), state.get(), o.seed, ct.out(), &outside_xy), "encrypt");
    if (outside_xy != 0) {
        std::cerr << "warning: plaintext has Z weight on a message qubit; the pad does not hide it\n";
    }
    OwnedString text;
    check(qhe_ciphertext_serialize(ct.get(), text.out()), "encrypt");
    write_file(o.out_path, text.str());
    return kExitOk;
}

int cmd_evaluate(const Options &o) {
    Circuit circuit;
    CipherText ct;
    load(circuit, o.circuit_path);
    load(ct, o.ct_path);
    CipherText result;
    check(qhe_evaluate(circuit.get(), ct.get(), o.seed, result.out()), "evaluate");
    OwnedString text;
    check(qhe_ciphertext_serialize(result.get(), text.out()), "evaluate");
    write_file(o.out_path, text.str());
    return kExitOk;
}

int cmd_decrypt(const Options &o) {
    Key key;
    CipherText ct;
    load(key, o.key_path);
    load(ct, o.ct_path);
    std::vector<int> bits(static_cast<std::size_t>(qhe_ciphertext_qubits(ct.get())));
    State state;
    check(qhe_decrypt(key.get(), ct.get(), bits.data(), bits.size(), state.out()), "decrypt");
    std::string line;
    for (int b : bits) {
        line += b < 0 ? '-' : static_cast<char>('0' + b);
    }
    std::cout << "bits: " << line << "\n";
    if (!o.out_path.empty()) {
        OwnedString text;
        check(qhe_state_serialize(state.get(), text.out()), "decrypt");
        write_file(o.out_path, text.str());
    }
    return kExitOk;
}

int cmd_run(const Options &o) {
    Circuit circuit;
    State state;
    load(circuit, o.circuit_path);
    load(state, o.state_path);
    OwnedString json;
    check(qhe_circuit_run(circuit.get(), state.get(), json.out()), "run");
    if (o.out_path.empty()) {
        std::cout << json.str();
    } else {
        write_file(o.out_path, json.str());
    }
    return kExitOk;
}

int cmd_verify(const Options &o) {
    OwnedString report;
    int passed = 0;
    if (o.mode == "correctness") {
        check(qhe_verify_correctness(o.cases, o.max_qubits, o.max_gates, o.kappa == 0 ? 8 : o.kappa,
                                     o.k == 0 ? 8 : o.k, o.seed, o.tolerance, report.out(), &passed),
              "verify");
    } else if (o.mode == "security") {
        check(qhe_verify_security(o.kappa == 0 ? 3 : o.kappa, o.n == 0 ? 2 : o.n, o.k, o.pairs, o.method.c_str(),
                                  o.seed, o.tolerance, report.out(), &passed),
              "verify");
    } else {
        check(qhe_verify_bounds(o.delta, o.epsilon, o.p_max, report.out(), &passed), "verify");
    }
    if (o.report_path.empty()) {
        std::cout << report.str();
    } else {
        write_file(o.report_path, report.str());
    }
    std::cout << o.mode << ": " << (passed != 0 ? "passed" : "bound violated") << "\n";
    return passed != 0 ? kExitOk : kExitBoundViolation;
}

int cmd_serve(const Options &o) {
    std::cerr << "serving " << o.sessions << " session(s)\n";
    check(qhe_serve(o.port, o.sessions, o.seed, 1), "serve");
    return kExitOk;
}

int cmd_demo(const Options &o) {
    const std::string circuit_text = read_file(o.circuit_path);
    OwnedString transcript;
    double tv = 0;
    int clean = 0;
    check(qhe_demo(o.transport.c_str(), o.port, circuit_text.c_str(), o.runs, o.seed, o.kappa == 0 ? 8 : o.kappa,
                   transcript.out(), &tv, &clean),
          "demo");
    if (!o.transcript_path.empty()) {
        write_file(o.transcript_path, transcript.str());
    }
    std::cout << "runs: " << o.runs << "\n";
    std::cout << "total variation from exact: " << tv << "\n";
    std::cout << "wire audit: " << (clean != 0 ? "clean" : "KEY MATERIAL FOUND") << "\n";
    return clean != 0 ? kExitOk : kExitBoundViolation;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Homomorphic encryption for IQP circuits (simulation)"};
    app.require_subcommand(1);
    Options o;

    auto *prepare = app.add_subcommand("prepare", "write a product state file");
    prepare->add_option("--product", o.product, "one label per qubit from 0 1 + - r l")->required();
    prepare->add_option("--out", o.out_path)->required();

    auto *keygen = app.add_subcommand("keygen", "generate a secret key");
    keygen->add_option("--kappa", o.kappa)->required();
    keygen->add_option("--n", o.n, "maximum message qubits")->required();
    keygen->add_option("--k", o.k, "hash independence order (default max(kappa, n))");
    keygen->add_option("--seed", o.seed);
    keygen->add_option("--out", o.out_path)->required();

    auto *encrypt = app.add_subcommand("encrypt", "encrypt a state file");
    encrypt->add_option("--key", o.key_path)->required();
    encrypt->add_option("--state", o.state_path)->required();
    encrypt->add_option("--seed", o.seed);
    encrypt->add_option("--out", o.out_path)->required();

    auto *evaluate = app.add_subcommand("evaluate", "apply an IQP circuit to a ciphertext");
    evaluate->add_option("--circuit", o.circuit_path)->required();
    evaluate->add_option("--ct", o.ct_path)->required();
    evaluate->add_option("--seed", o.seed);
    evaluate->add_option("--out", o.out_path)->required();
    // Accepted only so that it can be refused with a clear message.
    evaluate->add_option("--key", o.key_path);

    auto *decrypt = app.add_subcommand("decrypt", "decrypt a ciphertext");
    decrypt->add_option("--key", o.key_path)->required();
    decrypt->add_option("--ct", o.ct_path)->required();
    decrypt->add_option("--out", o.out_path, "file for the residual state");

    auto *run = app.add_subcommand("run", "exact plaintext outcome distribution");
    run->add_option("--circuit", o.circuit_path)->required();
    run->add_option("--state", o.state_path)->required();
    run->add_option("--out", o.out_path);

    auto *verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--mode", o.mode)->required()->check(CLI::IsMember({"correctness", "security", "bounds"}));
    verify->add_option("--method", o.method)->check(CLI::IsMember({"exact", "analytic"}));
    verify->add_option("--kappa", o.kappa);
    verify->add_option("--n", o.n);
    verify->add_option("--k", o.k);
    verify->add_option("--seed", o.seed);
    verify->add_option("--cases", o.cases);
    verify->add_option("--max-qubits", o.max_qubits);
    verify->add_option("--max-gates", o.max_gates);
    verify->add_option("--pairs", o.pairs);
    verify->add_option("--tolerance", o.tolerance);
    verify->add_option("--delta", o.delta);
    verify->add_option("--epsilon", o.epsilon);
    verify->add_option("--p-max", o.p_max);
    verify->add_option("--report", o.report_path);

    auto *serve = app.add_subcommand("serve", "evaluation server on loopback TCP");
    serve->add_option("--port", o.port, "0 picks a free port, printed on stdout");
    serve->add_option("--sessions", o.sessions);
    serve->add_option("--seed", o.seed);

    auto *demo = app.add_subcommand("demo", "client side of the delegation demo");
    demo->add_option("--transport", o.transport)->check(CLI::IsMember({"inproc", "socket"}));
    demo->add_option("--port", o.port);
    demo->add_option("--circuit", o.circuit_path)->required();
    demo->add_option("--runs", o.runs);
    demo->add_option("--seed", o.seed);
    demo->add_option("--kappa", o.kappa);
    demo->add_option("--transcript", o.transcript_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*prepare) return cmd_prepare(o);
        if (*keygen) return cmd_keygen(o);
        if (*encrypt) return cmd_encrypt(o);
        if (*evaluate) {
            if (!o.key_path.empty()) {
                std::cerr << "error: evaluate never takes a key; refusing --key\n";
                return kExitUsage;
            }
            return cmd_evaluate(o);
        }
        if (*decrypt) return cmd_decrypt(o);
        if (*run) return cmd_run(o);
        if (*verify) return cmd_verify(o);
        if (*serve) return cmd_serve(o);
        if (*demo) return cmd_demo(o);
    } catch (const Failure &f) {
        std::cerr << "error: " << f.message << "\n";
        return f.exit_code;
    }
    return kExitUsage;
}
