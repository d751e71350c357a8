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

// Acceptance harness: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "../oracles.hpp"
#include "../security_oracle.hpp"
#include "delegation/demo.hpp"
#include "delegation/formats.hpp"
#include "hashing/hash_function.hpp"
#include "pauli/pauli.hpp"
#include "scheme/scheme.hpp"
#include "sim/gates.hpp"
#include "verification/bounds.hpp"
#include "verification/checks.hpp"
#include "verification/generators.hpp"

using namespace qhe;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

int failures = 0;

void report(int id, const std::string &title, double limit_seconds, const std::function<Outcome()> &body) {
    const auto start = Clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception &e) {
        out = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    bool ok = out.ok;
    std::string detail = out.detail;
    if (limit_seconds > 0 && seconds > limit_seconds) {
        ok = false;
        detail += "; over the time limit";
    }
    char timing[64];
    std::snprintf(timing, sizeof(timing), "%.3f s", seconds);
    std::printf("%s criterion %d (%s): %s [%s]\n", ok ? "PASS" : "FAIL", id, title.c_str(), detail.c_str(), timing);
    std::fflush(stdout);
    failures += ok ? 0 : 1;
}

std::string fmt(const char *format, double a, double b = 0, double c = 0) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), format, a, b, c);
    return buf;
}

std::string fixture(const std::string &name) {
    std::ifstream in(std::string(QHE_FIXTURE_DIR) + "/" + name, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<DiagonalGate> gate_placements(int n) {
    std::vector<DiagonalGate> out;
    for (int a = 0; a < n; ++a) {
        out.push_back(DiagonalGate::z(a));
        out.push_back(DiagonalGate::s(a));
        out.push_back(DiagonalGate::t(a));
        out.push_back(DiagonalGate({a}, {std::polar(1.0, 0.7), std::polar(1.0, -1.9)}));
        for (int b = 0; b < n; ++b) {
            if (b == a) {
                continue;
            }
            out.push_back(DiagonalGate::cz(a, b));
            out.push_back(DiagonalGate::cs(a, b));
            for (int c = 0; c < n; ++c) {
                if (c != a && c != b) {
                    out.push_back(DiagonalGate::ccz(a, b, c));
                }
            }
        }
    }
    return out;
}

Outcome correctness() {
    CorrectnessSuiteOptions o;
    o.cases = 200;
    o.max_qubits = 4;
    o.max_gates = 10;
    o.kappa = 8;
    o.k = 8;
    o.seed = 2026;
    const auto r = run_correctness_suite(o);
    const bool ok = r.cases >= 200 && r.worst_residual <= 1e-9;
    return {ok, fmt("worst residual %.3g <= 1e-9 over %.0f cases", r.worst_residual, r.cases)};
}

Outcome weak_security() {
    const SchemeParams params{3, 2, 3};
    const double bound = collision_bound(params);
    const std::uint64_t family = HashFunction::family_size(3, 3);
    Rng rng(2027);
    double worst = 0;
    double worst_distinct = 0;
    double oracle_gap = 0;
    const int pairs = 20;
    for (int i = 0; i < pairs; ++i) {
        const auto a = random_xy_mixture(2, rng);
        const auto b = random_xy_mixture(2, rng);
        const auto r = check_weak_security(params, a, b, SecurityMode::kExact);
        worst = std::max(worst, *r.distance);
        worst_distinct = std::max(worst_distinct, r.distance_distinct);
        oracle_gap = std::max(oracle_gap, std::abs(*r.distance - oracle::brute_force_security(3, 3, a.matrix(),
                                                                                                 b.matrix(), 2, false)));
    }
    const bool ok = family == 512 && bound == 0.125 && worst <= bound + 1e-9 && worst_distinct <= 1e-9 &&
                    oracle_gap <= 1e-12;
    return {ok, fmt("worst distance %.6g <= %.3g + 1e-9, distinct-r %.3g <= 1e-9", worst, bound, worst_distinct) +
                    fmt(", 20 pairs, 512 functions x 64 r vectors, brute-force gap %.2g", oracle_gap)};
}

Outcome maximal_mixing() {
    Rng rng(2028);
    const oracle::Mat z = oracle::letter('Z');
    const oracle::Mat half_identity = oracle::Mat::Identity(2, 2) / 2.0;
    double worst_xy = 0;
    double worst_gap = 0;
    for (int i = 0; i < 50; ++i) {
        const auto rho = random_xy_qubit(rng);
        const DensityMatrix mixed((rho.matrix() + z * rho.matrix() * z) / 2.0);
        worst_xy = std::max(worst_xy, trace_distance(mixed, DensityMatrix::maximally_mixed(1)));
    }
    for (int i = 0; i < 50; ++i) {
        const auto rho = random_non_xy_qubit(rng);
        const DensityMatrix mixed((rho.matrix() + z * rho.matrix() * z) / 2.0);
        const double r3 = (rho.matrix() * z).trace().real();
        worst_gap = std::max(worst_gap, std::abs(trace_distance(mixed, DensityMatrix::maximally_mixed(1)) -
                                                 std::abs(r3) / 2));
        worst_gap = std::max(worst_gap, std::abs(oracle::trace_distance(mixed.matrix(), half_identity) -
                                                 std::abs(r3) / 2));
    }
    return {worst_xy <= 1e-12 && worst_gap <= 1e-10,
            fmt("xy distance %.3g <= 1e-12, non-xy |d - |r3|/2| %.3g <= 1e-10", worst_xy, worst_gap)};
}

Outcome independence() {
    const int kappa = 3;
    const int k = 3;
    std::vector<std::vector<int>> table;
    for_each_hash(kappa, k, [&](const HashFunction &h) {
        std::vector<int> row;
        for (std::uint32_t r = 0; r < 8; ++r) {
            row.push_back(h(r));
        }
        table.push_back(row);
    });
    int checks = 0;
    bool uniform = table.size() == 512;
    for (int a = 0; a < 8; ++a) {
        for (int b = a + 1; b < 8; ++b) {
            for (int c = b + 1; c < 8; ++c) {
                std::vector<int> counts(8, 0);
                for (const auto &row : table) {
                    ++counts[static_cast<std::size_t>(row[a] << 2 | row[b] << 1 | row[c])];
                }
                for (int count : counts) {
                    uniform = uniform && count == 64;
                    ++checks;
                }
            }
        }
    }
    return {uniform && checks == 56 * 8, std::string("56 input triples x 8 output patterns over 512 functions, ") +
                                             (uniform ? "every count exactly 64" : "counts differ")};
}

Outcome bound_reproduction() {
    const double arg = qpir_entropy_argument(1e-4, 1e-4);
    const double h = binary_entropy(arg);
    const double coefficient = qpir_coefficient(1e-4, 1e-4);
    bool all = true;
    for (int p = 1; p <= 64; ++p) {
        all = all && qpir_reduction_audit(p, 1e-4, 1e-4).contradiction;
    }
    const bool ok = coefficient >= 0.8 && coefficient <= 0.87 && h < 0.2 && all &&
                    std::abs(coefficient - 0.8580039614527819) <= 1e-12;
    return {ok, fmt("coefficient %.10f in [0.8, 0.87], H(%.6f) = %.6f < 0.2", coefficient, arg, h) +
                    ", contradiction for p = 1..64: " + (all ? "yes" : "no")};
}

Outcome amplification() {
    const double spot = amplify_weak_to_strong(std::ldexp(1.0, -40), 10);
    bool exact = spot == std::ldexp(1.0, -19);
    int checked = 0;
    for (int n = 1; n <= 10; ++n) {
        for (int e = 2 * n + 1; e <= 60; ++e) {
            const double eps = std::ldexp(1.0, -e);
            exact = exact && amplify_weak_to_strong(eps, n) == std::ldexp(eps, 2 * n + 1);
            const double odd = 0.7 * eps;
            exact = exact && amplify_weak_to_strong(odd, n) == odd * std::ldexp(1.0, 2 * n + 1);
            checked += 2;
        }
    }
    return {exact, fmt("(2^-40, N=10) -> %.10g = 2^-19; %.0f further exact spot checks", spot, checked)};
}

Outcome pipeline_properties() {
    std::vector<std::string> failed;
    Rng rng(2029);

    // pad commutation, every built-in gate placement and pad pattern, n <= 3
    double commute = 0;
    for (int n = 1; n <= 3; ++n) {
        const auto rho = random_density_matrix(n, rng);
        for (const auto &g : gate_placements(n)) {
            for (int pattern = 0; pattern < (1 << n); ++pattern) {
                std::vector<int> pads;
                for (int q = 0; q < n; ++q) {
                    pads.push_back((pattern >> q) & 1);
                }
                const auto lhs = apply_diagonal(apply_z_pads(rho, pads), g).matrix();
                const auto rhs = apply_z_pads(apply_diagonal(rho, g), pads).matrix();
                commute = std::max(commute, (lhs - rhs).cwiseAbs().maxCoeff());
            }
        }
    }
    if (commute > 1e-12) {
        failed.push_back("pad commutation");
    }

    // X-outcome flip
    double flip = 0;
    for (int n = 1; n <= 3; ++n) {
        const auto rho = random_density_matrix(n, rng);
        for (int q = 0; q < n; ++q) {
            std::vector<int> pads(static_cast<std::size_t>(n), 0);
            pads[static_cast<std::size_t>(q)] = 1;
            const auto m = measure_x(rho, q);
            const auto mf = measure_x(apply_z_pads(rho, pads), q);
            for (int b = 0; b < 2; ++b) {
                flip = std::max(flip, std::abs(m.outcomes[b].probability - mf.outcomes[1 - b].probability));
            }
        }
    }
    if (flip > 1e-12) {
        failed.push_back("X-outcome flip");
    }

    // Pauli decomposition reconstruction
    double recon = 0;
    for (int n = 1; n <= 4; ++n) {
        for (int t = 0; t < 5; ++t) {
            const auto rho = random_density_matrix(n, rng);
            const auto terms = pauli_decompose(rho.matrix());
            recon = std::max(recon, (pauli_reconstruct(terms, n) - rho.matrix()).cwiseAbs().maxCoeff());
        }
    }
    if (recon > 1e-12) {
        failed.push_back("decomposition");
    }

    // metric axioms on random triples
    double metric = 0;
    for (int t = 0; t < 60; ++t) {
        const int n = 1 + t % 3;
        const auto a = random_density_matrix(n, rng);
        const auto b = random_density_matrix(n, rng);
        const auto c = random_density_matrix(n, rng);
        const double ab = trace_distance(a, b);
        const double ba = trace_distance(b, a);
        const double bc = trace_distance(b, c);
        const double ac = trace_distance(a, c);
        metric = std::max({metric, trace_distance(a, a), std::abs(ab - ba), ac - (ab + bc), -ab, ab - 1.0,
                           std::abs(ab - oracle::trace_distance(a.matrix(), b.matrix()))});
    }
    if (metric > 1e-10) {
        failed.push_back("metric axioms");
    }

    // byte-exact serialization round trips
    bool round_trips = true;
    for (const char *name : {"t_cz.circuit.json", "diag.circuit.json"}) {
        const auto text = fixture(name);
        round_trips = round_trips && serialize_circuit(parse_circuit(text)) == text;
    }
    for (const char *name : {"plus_plus.ct.json", "t_cz.evaluated.ct.json"}) {
        const auto text = fixture(name);
        round_trips = round_trips && serialize_ciphertext(parse_ciphertext(text)) == text;
    }
    round_trips = round_trips && serialize_state(parse_state(fixture("plus_plus.state.json"))) ==
                                     fixture("plus_plus.state.json");
    round_trips = round_trips && serialize_key(parse_key(fixture("k3n2.key.json"))) == fixture("k3n2.key.json");
    for (int t = 0; t < 20; ++t) {
        const int n = 1 + t % 4;
        const auto key = keygen(SchemeParams::with_default_k(8, n), rng);
        const auto circuit = random_iqp_circuit(n, 10, rng);
        const auto ct = evaluate(circuit, encrypt(key, random_xy_product(n, rng), rng), rng);
        const auto ct_text = serialize_ciphertext(ct);
        const auto circuit_text = serialize_circuit(circuit);
        const auto key_text = serialize_key(key);
        round_trips = round_trips && serialize_ciphertext(parse_ciphertext(ct_text)) == ct_text &&
                      serialize_circuit(parse_circuit(circuit_text)) == circuit_text &&
                      serialize_key(parse_key(key_text)) == key_text;
    }
    if (!round_trips) {
        failed.push_back("serialization");
    }

    // evaluator key isolation, audited on the wire
    DemoOptions demo;
    demo.circuit_text = fixture("t_cz.circuit.json");
    demo.runs = 1000;
    demo.seed = 2030;
    const auto d = run_delegation_demo(demo);
    if (!d.audit.clean || d.server_error || d.total_variation > 0.05) {
        failed.push_back("wire audit");
    }

    const std::string detail = fmt("commutation %.2g, flip %.2g, reconstruction %.2g", commute, flip, recon) +
                               fmt(", metric %.2g", metric) + ", round trips " + (round_trips ? "exact" : "differ") +
                               ", audit " + (d.audit.clean ? "clean" : "dirty") +
                               fmt(", demo tv %.3f", d.total_variation);
    std::string out;
    for (const auto &f : failed) {
        out += (out.empty() ? "" : ", ") + f;
    }
    return {failed.empty(), failed.empty() ? detail : "failed: " + out};
}

}  // namespace

int main() {
    report(1, "perfect correctness", 60, correctness);
    report(2, "exact weak security", 120, weak_security);
    report(3, "maximal mixing", 5, maximal_mixing);
    report(4, "k-wise independence", 10, independence);
    report(5, "bound reproduction", 1, bound_reproduction);
    report(6, "amplification", 0, amplification);
    report(7, "pipeline properties", 0, pipeline_properties);
    std::printf("%d of 7 criteria failed\n", failures);
    return failures;
}
