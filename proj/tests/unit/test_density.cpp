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

#include <random>

#include "../oracles.hpp"
#include "sim/density.hpp"
#include "util/error.hpp"
#include "verification/generators.hpp"

using namespace qhe;

TEST(linalg, basis_bit_reads_qubit_zero_as_high_bit) {
    EXPECT_EQ(basis_bit(0b100, 0, 3), 1);
    EXPECT_EQ(basis_bit(0b100, 2, 3), 0);
    EXPECT_EQ(qubit_mask(0, 3), 0b100u);
    EXPECT_EQ(qubit_mask(2, 3), 0b001u);
    const auto rho = DensityMatrix::basis_state(2, 0b10);
    const oracle::Mat expect = oracle::kron(states::one().matrix(), states::zero().matrix());
    EXPECT_LT((rho.matrix() - expect).norm(), 1e-15);
}

TEST(linalg, kron_matches_oracle) {
    std::mt19937_64 gen(7);
    for (int t = 0; t < 10; ++t) {
        const auto a = oracle::random_density(1, gen);
        const auto b = oracle::random_density(2, gen);
        EXPECT_LT((kron(a, b) - oracle::kron(a, b)).norm(), 1e-15);
    }
}

TEST(linalg, jacobi_eigenvalues_match_eigen) {
    std::mt19937_64 gen(11);
    std::normal_distribution<double> normal;
    for (int n = 1; n <= 5; ++n) {
        const Eigen::Index d = Eigen::Index{1} << n;
        for (int t = 0; t < 5; ++t) {
            oracle::Mat g(d, d);
            for (Eigen::Index i = 0; i < d; ++i) {
                for (Eigen::Index j = 0; j < d; ++j) {
                    g(i, j) = oracle::C(normal(gen), normal(gen));
                }
            }
            const oracle::Mat h = g + g.adjoint();
            const auto ours = hermitian_eigenvalues(h);
            Eigen::SelfAdjointEigenSolver<oracle::Mat> solver(h, Eigen::EigenvaluesOnly);
            ASSERT_EQ(static_cast<Eigen::Index>(ours.size()), d);
            for (Eigen::Index i = 0; i < d; ++i) {
                EXPECT_NEAR(ours[static_cast<std::size_t>(i)], solver.eigenvalues()(i), 1e-10);
            }
        }
    }
}

TEST(linalg, eigenvalues_of_diagonal_and_degenerate_input) {
    oracle::Mat m = oracle::Mat::Zero(4, 4);
    m.diagonal() << 3, -1, 3, 0;
    const auto ev = hermitian_eigenvalues(m);
    EXPECT_EQ(ev, (std::vector<double>{-1, 0, 3, 3}));
    EXPECT_DOUBLE_EQ(hermitian_trace_norm(m), 7.0);
}

TEST(density, invariants_are_enforced) {
    oracle::Mat non_hermitian(2, 2);
    non_hermitian << 0.5, 0.1, 0.2, 0.5;
    EXPECT_THROW(DensityMatrix{non_hermitian}, Error);

    oracle::Mat bad_trace = oracle::Mat::Identity(2, 2);
    EXPECT_THROW(DensityMatrix{bad_trace}, Error);

    oracle::Mat negative(2, 2);
    negative << 1.5, 0, 0, -0.5;
    EXPECT_THROW(DensityMatrix{negative}, Error);

    oracle::Mat not_square(2, 4);
    not_square.setZero();
    EXPECT_THROW(DensityMatrix{not_square}, Error);

    EXPECT_NO_THROW(DensityMatrix(oracle::Mat::Identity(2, 2) / 2.0));
}

TEST(density, dimension_cap) {
    EXPECT_NO_THROW(check_qubit_count(kMaxQubits));
    try {
        check_qubit_count(kMaxQubits + 1);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::kDimension);
    }
}

TEST(density, named_states) {
    EXPECT_NEAR(std::abs(states::plus()(0, 1) - 0.5), 0, 1e-15);
    EXPECT_NEAR(std::abs(states::minus()(0, 1) + 0.5), 0, 1e-15);
    const auto y = states::xy_plane(M_PI / 2);
    EXPECT_NEAR(std::abs(y(1, 0) - oracle::C(0, 0.5)), 0, 1e-15);
    const auto b = states::from_bloch(0.3, -0.2, 0.1);
    const oracle::Mat expect =
        (oracle::letter('I') + 0.3 * oracle::letter('X') - 0.2 * oracle::letter('Y') + 0.1 * oracle::letter('Z')) / 2.0;
    EXPECT_LT((b.matrix() - expect).norm(), 1e-15);
    EXPECT_THROW(states::from_bloch(1, 1, 0), Error);
    EXPECT_LT((states::plus_n(3).matrix() - oracle::Mat::Constant(8, 8, 1.0 / 8)).norm(), 1e-15);
}

TEST(density, trace_distance_matches_oracle) {
    Rng rng(3);
    for (int n = 1; n <= 4; ++n) {
        for (int t = 0; t < 5; ++t) {
            const auto a = random_density_matrix(n, rng);
            const auto b = random_density_matrix(n, rng);
            EXPECT_NEAR(trace_distance(a, b), oracle::trace_distance(a.matrix(), b.matrix()), 1e-10);
        }
    }
    EXPECT_NEAR(trace_distance(states::zero(), states::one()), 1.0, 1e-15);
    EXPECT_NEAR(trace_distance(states::plus(), states::zero()), std::sqrt(0.5), 1e-12);
}

TEST(density, trace_distance_rejects_mismatched_sizes) {
    EXPECT_THROW(trace_distance(states::zero(), states::plus_n(2)), Error);
}

TEST(density, trace_out_of_product_state) {
    Rng rng(5);
    const auto a = random_density_matrix(1, rng);
    const auto b = random_density_matrix(2, rng);
    const auto c = random_density_matrix(1, rng);
    const std::vector<DensityMatrix> factors{a, b, c};
    const auto joint = DensityMatrix::product(factors);
    const std::vector<int> outer{0, 3};
    EXPECT_LT((trace_out(joint, outer).matrix() - b.matrix()).norm(), 1e-12);
    const std::vector<int> middle{1, 2};
    EXPECT_LT((trace_out(joint, middle).matrix() - oracle::kron(a.matrix(), c.matrix())).norm(), 1e-12);
    const std::vector<int> everything{0, 1, 2, 3};
    EXPECT_EQ(trace_out(joint, everything).num_qubits(), 0);
}

TEST(density, maximally_mixed_and_basis_states) {
    const auto mm = DensityMatrix::maximally_mixed(2);
    EXPECT_LT((mm.matrix() - oracle::Mat::Identity(4, 4) / 4.0).norm(), 1e-15);
    EXPECT_THROW(DensityMatrix::basis_state(2, 4), Error);
}
