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
#include "pauli/pauli.hpp"
#include "util/error.hpp"
#include "verification/generators.hpp"

using namespace qhe;

namespace {

const oracle::C kI(0, 1);

oracle::Mat literal(int n, std::uint64_t u, std::uint64_t v, int c) {
    // i^c Z^u X^v assembled factor by factor.
    oracle::Mat z = oracle::Mat::Identity(1, 1);
    oracle::Mat x = oracle::Mat::Identity(1, 1);
    for (int q = 0; q < n; ++q) {
        z = oracle::kron(z, ((u >> q) & 1U) ? oracle::letter('Z') : oracle::letter('I'));
        x = oracle::kron(x, ((v >> q) & 1U) ? oracle::letter('X') : oracle::letter('I'));
    }
    return std::pow(kI, c) * z * x;
}

}  // namespace

TEST(pauli, matrix_is_phase_times_z_then_x) {
    for (int n = 1; n <= 2; ++n) {
        const std::uint64_t top = std::uint64_t{1} << n;
        for (std::uint64_t u = 0; u < top; ++u) {
            for (std::uint64_t v = 0; v < top; ++v) {
                for (int c = 0; c < 4; ++c) {
                    EXPECT_LT((pauli_matrix(PauliOperator(n, u, v, c)) - literal(n, u, v, c)).norm(), 1e-15);
                }
            }
        }
    }
}

TEST(pauli, y_needs_phase_three) {
    // ZX = iY, so the Hermitian Y is i^3 Z X and phase 1 gives -Y.
    EXPECT_LT((pauli_matrix(PauliOperator(1, 1, 1, 3)) - oracle::letter('Y')).norm(), 1e-15);
    EXPECT_LT((pauli_matrix(PauliOperator(1, 1, 1, 1)) + oracle::letter('Y')).norm(), 1e-15);
    EXPECT_EQ(PauliOperator::from_label("Y"), PauliOperator(1, 1, 1, 3));
}

TEST(pauli, labels) {
    EXPECT_EQ(PauliOperator::from_label("XIZ"), PauliOperator(3, 0b100, 0b001, 0));
    EXPECT_EQ(PauliOperator::from_label("-Z"), PauliOperator(1, 1, 0, 2));
    EXPECT_EQ(PauliOperator::from_label("iX"), PauliOperator(1, 0, 1, 1));
    EXPECT_EQ(PauliOperator::from_label("X_Y").label(), "+XIY");
    EXPECT_EQ(PauliOperator(1, 1, 1, 1).label(), "-Y");
    EXPECT_EQ(PauliOperator(1, 1, 0, 1).label(), "+iZ");
    EXPECT_THROW(PauliOperator::from_label("XQ"), Error);
    EXPECT_THROW(PauliOperator::from_label(""), Error);
    for (const char *s : {"+XYZ", "-iIYI", "+iZ", "-X"}) {
        EXPECT_EQ(PauliOperator::from_label(s).label(), s);
    }
}

TEST(pauli, dense_matrix_of_labels) {
    EXPECT_LT((pauli_matrix(PauliOperator::from_label("XYZ")) - oracle::pauli("XYZ")).norm(), 1e-15);
    EXPECT_LT((pauli_matrix(PauliOperator::from_label("-iZY")) + kI * oracle::pauli("ZY")).norm(), 1e-15);
}

TEST(pauli, product_matches_matrix_product_exhaustively) {
    const int n = 2;
    for (std::uint64_t u1 = 0; u1 < 4; ++u1) {
        for (std::uint64_t v1 = 0; v1 < 4; ++v1) {
            for (std::uint64_t u2 = 0; u2 < 4; ++u2) {
                for (std::uint64_t v2 = 0; v2 < 4; ++v2) {
                    const PauliOperator a(n, u1, v1, static_cast<int>(u1 + v2) % 4);
                    const PauliOperator b(n, u2, v2, static_cast<int>(v1) % 4);
                    const oracle::Mat prod = pauli_matrix(a) * pauli_matrix(b);
                    EXPECT_LT((pauli_matrix(a * b) - prod).norm(), 1e-14);
                    const bool commute = (pauli_matrix(a) * pauli_matrix(b) - pauli_matrix(b) * pauli_matrix(a)).norm() < 1e-12;
                    EXPECT_EQ(a.commutes_with(b), commute);
                }
            }
        }
    }
}

TEST(pauli, symplectic_product_examples) {
    const auto x = PauliOperator::from_label("X");
    const auto z = PauliOperator::from_label("Z");
    EXPECT_EQ(x.symplectic_product(z), 1);
    EXPECT_EQ(PauliOperator::from_label("XX").symplectic_product(PauliOperator::from_label("ZZ")), 0);
    EXPECT_EQ(x * z, PauliOperator(1, 1, 1, 2));  // XZ = -ZX
    EXPECT_THROW(x * PauliOperator::identity(2), Error);
}

TEST(pauli, from_matrix_round_trip) {
    for (std::uint64_t u = 0; u < 8; ++u) {
        for (std::uint64_t v = 0; v < 8; ++v) {
            for (int c = 0; c < 4; ++c) {
                const PauliOperator p(3, u, v, c);
                EXPECT_EQ(PauliOperator::from_matrix(pauli_matrix(p)), p);
            }
        }
    }
    EXPECT_THROW(PauliOperator::from_matrix(oracle::Mat::Identity(2, 2) * 2.0), Error);
}

TEST(pauli, hermitian_representative_is_hermitian) {
    for (std::uint64_t u = 0; u < 4; ++u) {
        for (std::uint64_t v = 0; v < 4; ++v) {
            const auto h = PauliOperator(2, u, v, 1).hermitian_representative();
            const oracle::Mat m = pauli_matrix(h);
            EXPECT_LT((m - m.adjoint()).norm(), 1e-15);
        }
    }
}

TEST(pauli, decomposition_coefficients_match_trace_formula) {
    std::mt19937_64 gen(21);
    const auto rho = oracle::random_density(2, gen);
    const auto terms = pauli_decompose(rho);
    ASSERT_EQ(terms.size(), 16u);
    for (const auto &t : terms) {
        const oracle::C expect = (pauli_matrix(t.op) * rho).trace() / 4.0;
        EXPECT_NEAR(t.coefficient, expect.real(), 1e-14);
        EXPECT_NEAR(expect.imag(), 0.0, 1e-14);
    }
}

TEST(pauli, decomposition_reconstructs) {
    Rng rng(9);
    for (int n = 1; n <= 4; ++n) {
        for (int t = 0; t < 3; ++t) {
            const auto rho = random_density_matrix(n, rng);
            const auto terms = pauli_decompose(rho.matrix());
            const ComplexMatrix back = pauli_reconstruct(terms, n);
            EXPECT_LE((back - rho.matrix()).cwiseAbs().maxCoeff(), 1e-12);
        }
    }
    oracle::Mat skew(2, 2);
    skew << 0, 1, -1, 0;
    EXPECT_THROW(pauli_decompose(skew), Error);
}

TEST(pauli, xy_membership) {
    EXPECT_TRUE(is_xy_state(states::plus()));
    EXPECT_TRUE(is_xy_state(states::xy_plane(0.7)));
    EXPECT_TRUE(is_xy_state(DensityMatrix::maximally_mixed(2)));
    EXPECT_FALSE(is_xy_state(states::zero()));
    EXPECT_FALSE(is_xy_state(states::from_bloch(0.5, 0, 0.01)));

    const std::vector<DensityMatrix> f{states::plus(), states::zero()};
    const auto mixed = DensityMatrix::product(f);
    const std::vector<int> first{0};
    const std::vector<int> second{1};
    EXPECT_TRUE(is_xy_state(mixed, first));
    EXPECT_FALSE(is_xy_state(mixed, second));

    // (I + XX + YY - ZZ) / 4 is a Bell state; its ZZ term puts Z on both qubits.
    const DensityMatrix bell{(oracle::pauli("II") + oracle::pauli("XX") - oracle::pauli("YY") + oracle::pauli("ZZ")) / 4.0};
    EXPECT_FALSE(is_xy_state(bell));
    // Correlated but Z-free.
    const DensityMatrix xx{(oracle::pauli("II") + 0.5 * oracle::pauli("XX") + 0.5 * oracle::pauli("YX")) / 4.0};
    EXPECT_TRUE(is_xy_state(xx));
}

TEST(pauli, bloch_vector) {
    const auto b = bloch_vector(states::from_bloch(0.1, 0.2, -0.3));
    EXPECT_NEAR(b.x, 0.1, 1e-15);
    EXPECT_NEAR(b.y, 0.2, 1e-15);
    EXPECT_NEAR(b.z, -0.3, 1e-15);
    EXPECT_NEAR(b.norm_squared(), 0.14, 1e-15);
    EXPECT_THROW(bloch_vector(states::plus_n(2)), Error);
}
