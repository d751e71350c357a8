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

#include <cmath>

#include "../oracles.hpp"
#include "../security_oracle.hpp"
#include "scheme/scheme.hpp"
#include "verification/bounds.hpp"
#include "verification/checks.hpp"
#include "verification/generators.hpp"
#include "verification/report.hpp"

using namespace qhe;

TEST(bounds, binary_entropy) {
    EXPECT_DOUBLE_EQ(binary_entropy(0.5), 1.0);
    EXPECT_EQ(binary_entropy(0.0), 0.0);
    EXPECT_EQ(binary_entropy(1.0), 0.0);
    EXPECT_NEAR(binary_entropy(0.11), binary_entropy(0.89), 1e-15);
    EXPECT_NEAR(binary_entropy(0.9799), 0.14200164609115726, 1e-14);
    EXPECT_THROW(binary_entropy(-0.1), Error);
    EXPECT_THROW(binary_entropy(1.5), Error);
}

TEST(bounds, qpir_values) {
    EXPECT_NEAR(qpir_entropy_argument(1e-4, 1e-4), 0.9799010000250012, 1e-15);
    EXPECT_NEAR(qpir_coefficient(1e-4, 1e-4), 0.8580039614527819, 1e-13);
    EXPECT_NEAR(qpir_lower_bound({100, 1e-4, 1e-4}), 85.80039614527819, 1e-10);
    EXPECT_NEAR(qpir_lower_bound({10000, 1e-4, 1e-4}), 8580.03961452782, 1e-8);
    // Perfect protocols need n qubits; a coin-flip guess needs none.
    EXPECT_DOUBLE_EQ(qpir_lower_bound({64, 0, 0}), 64.0);
    EXPECT_NEAR(qpir_lower_bound({64, 0.5, 0}), 0.0, 1e-15);
    EXPECT_THROW(qpir_lower_bound({10, 0.6, 0}), Error);
    EXPECT_THROW(qpir_lower_bound({10, 0, -0.1}), Error);
    EXPECT_THROW(qpir_lower_bound({-1, 0, 0}), Error);
}

TEST(bounds, reduction_audit) {
    const auto one = qpir_reduction_audit(1, 1e-4, 1e-4);
    EXPECT_EQ(one.n, 100.0);
    EXPECT_NEAR(one.communicated, 7.643856189774724, 1e-12);
    EXPECT_NEAR(one.communicated_log10_variant, 4.321928094887362, 1e-12);
    EXPECT_NEAR(one.lower_bound, 85.80039614527819, 1e-10);
    EXPECT_TRUE(one.contradiction);
    const auto ten = qpir_reduction_audit(10, 1e-4, 1e-4);
    EXPECT_EQ(ten.n, 10000.0);
    EXPECT_NEAR(ten.communicated, 142.8771237954945, 1e-10);
    EXPECT_NEAR(ten.communicated_log10_variant, 109.65784284662085, 1e-10);
    EXPECT_NEAR(ten.lower_bound, 8580.03961452782, 1e-8);
    for (int p = 1; p <= 64; ++p) {
        EXPECT_TRUE(qpir_reduction_audit(p, 1e-4, 1e-4).contradiction) << p;
    }
    EXPECT_FALSE(qpir_reduction_audit(3, 0.5, 0).contradiction);
    EXPECT_THROW(qpir_reduction_audit(0, 0, 0), Error);
}

TEST(bounds, amplification) {
    EXPECT_EQ(amplify_weak_to_strong(std::ldexp(1.0, -40), 10), std::ldexp(1.0, -19));
    EXPECT_EQ(amplify_weak_to_strong(0.01, 1), 0.08);
    EXPECT_EQ(amplify_weak_to_strong(0.5, 2), 1.0);
    EXPECT_EQ(amplify_weak_to_strong(0.0, 5), 0.0);
    EXPECT_THROW(amplify_weak_to_strong(-1, 1), Error);
}

TEST(security, collision_numbers) {
    EXPECT_DOUBLE_EQ(collision_bound(SchemeParams{3, 2, 3}), 0.125);
    EXPECT_DOUBLE_EQ(collision_probability(3, 2), 0.125);
    EXPECT_DOUBLE_EQ(collision_probability(3, 3), 1.0 - 7.0 / 8.0 * 6.0 / 8.0);
    EXPECT_DOUBLE_EQ(collision_probability(3, 1), 0.0);
    EXPECT_DOUBLE_EQ(collision_bound(SchemeParams{4, 3, 4}), 3.0 / 16.0);
}

TEST(security, z_twirl) {
    Rng rng(3);
    for (int t = 0; t < 20; ++t) {
        const auto rho = random_xy_qubit(rng);
        EXPECT_LE(trace_distance(z_twirl(rho), DensityMatrix::maximally_mixed(1)), 1e-12);
        const auto s = random_non_xy_qubit(rng);
        EXPECT_NEAR(trace_distance(z_twirl(s), DensityMatrix::maximally_mixed(1)), std::abs(bloch_vector(s).z) / 2,
                    1e-12);
    }
    const auto two = z_twirl(random_density_matrix(2, rng));
    for (Eigen::Index i = 0; i < 4; ++i) {
        for (Eigen::Index j = 0; j < 4; ++j) {
            if (i != j) {
                EXPECT_LE(std::abs(two.matrix()(i, j)), 1e-15);
            }
        }
    }
}

TEST(security, exact_mode_matches_brute_force) {
    Rng rng(5);
    const SchemeParams p{3, 2, 3};
    for (int t = 0; t < 4; ++t) {
        const auto a = random_xy_mixture(2, rng);
        const auto b = random_xy_mixture(2, rng);
        const auto r = check_weak_security(p, a, b, SecurityMode::kExact);
        ASSERT_TRUE(r.distance.has_value());
        EXPECT_NEAR(*r.distance, oracle::brute_force_security(3, 3, a.matrix(), b.matrix(), 2, false), 1e-12);
        EXPECT_NEAR(r.distance_distinct, oracle::brute_force_security(3, 3, a.matrix(), b.matrix(), 2, true), 1e-12);
        EXPECT_LE(*r.distance, 0.125 + 1e-9);
        EXPECT_LE(r.distance_distinct, 1e-9);
    }
}

TEST(security, collision_witness_is_tight) {
    const std::vector<DensityMatrix> l{states::plus(), states::plus()};
    const std::vector<DensityMatrix> r{states::plus(), states::minus()};
    const auto a = DensityMatrix::product(l);
    const auto b = DensityMatrix::product(r);
    const auto res = check_weak_security(SchemeParams{3, 2, 3}, a, b, SecurityMode::kExact);
    EXPECT_NEAR(*res.distance, 0.125, 1e-12);
    EXPECT_NEAR(*res.distance, oracle::brute_force_security(3, 3, a.matrix(), b.matrix(), 2, false), 1e-12);
    EXPECT_NEAR(res.worst_block_distance, 1.0, 1e-12);
    ASSERT_EQ(res.worst_randomness.size(), 2u);
    EXPECT_EQ(res.worst_randomness[0], res.worst_randomness[1]);
}

TEST(security, non_xy_inputs_are_distinguishable) {
    const auto res = check_weak_security(SchemeParams{2, 1, 2}, states::zero(), states::one(), SecurityMode::kExact);
    EXPECT_NEAR(*res.distance, 1.0, 1e-12);
}

TEST(security, analytic_mode_bounds_exact) {
    Rng rng(6);
    const SchemeParams p{3, 2, 3};
    for (int t = 0; t < 4; ++t) {
        const auto a = random_xy_mixture(2, rng);
        const auto b = random_xy_mixture(2, rng);
        const auto exact = check_weak_security(p, a, b, SecurityMode::kExact);
        const auto analytic = check_weak_security(p, a, b, SecurityMode::kAnalytic);
        EXPECT_FALSE(analytic.distance.has_value());
        EXPECT_GE(analytic.bound + 1e-12, *exact.distance);
        EXPECT_NEAR(analytic.distance_distinct, exact.distance_distinct, 1e-12);
    }
}

TEST(security, exact_mode_limits) {
    try {
        check_weak_security(SchemeParams{4, 4, 4}, states::plus_n(4), states::plus_n(4), SecurityMode::kExact);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::kInfeasible);
    }
    EXPECT_NO_THROW(
        check_weak_security(SchemeParams{8, 4, 8}, states::plus_n(4), states::plus_n(4), SecurityMode::kAnalytic));
}

TEST(correctness, suite_small) {
    CorrectnessSuiteOptions o;
    o.cases = 25;
    o.seed = 99;
    const auto r = run_correctness_suite(o);
    EXPECT_EQ(r.cases, 25);
    EXPECT_LE(r.worst_residual, 1e-9);
    const auto report = correctness_report(o, r, 1e-9);
    EXPECT_TRUE(report["passed"].get<bool>());
}

TEST(correctness, cq_distance) {
    CqState a;
    CqState b;
    a[0] = oracle::Mat::Constant(1, 1, 0.7);
    a[1] = oracle::Mat::Constant(1, 1, 0.3);
    b[0] = oracle::Mat::Constant(1, 1, 0.4);
    b[1] = oracle::Mat::Constant(1, 1, 0.6);
    EXPECT_NEAR(cq_distance(a, b), 0.3, 1e-15);
    EXPECT_NEAR(outcome_total_variation(a, b), 0.3, 1e-15);
    CqState c;
    c[0] = oracle::Mat::Constant(1, 1, 1.0);
    CqState d;
    d[3] = oracle::Mat::Constant(1, 1, 1.0);
    EXPECT_NEAR(cq_distance(c, d), 1.0, 1e-15);
}

TEST(reports, bounds_and_security) {
    const auto bounds = bounds_report(BoundsOptions{});
    EXPECT_TRUE(bounds["passed"].get<bool>());
    EXPECT_EQ(bounds["audits"].size(), 64u);
    BoundsOptions free_guess;
    free_guess.delta = 0.5;
    free_guess.epsilon = 0;
    EXPECT_FALSE(bounds_report(free_guess)["passed"].get<bool>());

    SecuritySuiteOptions s;
    s.pairs = 3;
    const auto result = run_security_suite(s);
    EXPECT_EQ(result.pairs, 3);
    EXPECT_TRUE(security_report(s, result, 1e-9)["passed"].get<bool>());
}

TEST(generators, produce_valid_states) {
    Rng rng(1);
    for (int t = 0; t < 20; ++t) {
        EXPECT_NEAR(bloch_vector(random_xy_qubit(rng)).z, 0.0, 1e-15);
        EXPECT_GE(std::abs(bloch_vector(random_non_xy_qubit(rng)).z), 0.05);
        EXPECT_TRUE(is_xy_state(random_xy_mixture(3, rng)));
        random_density_matrix(3, rng).validate();
        const auto c = random_iqp_circuit(3, 10, rng);
        EXPECT_LE(c.gates().size(), 10u);
    }
}
