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

#include "sim/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "util/error.hpp"

namespace qhe {

namespace {

constexpr double kJacobiTolerance = 1e-13;
constexpr int kMaxSweeps = 100;

double off_diagonal_norm(const ComplexMatrix &a) {
    double sum = 0;
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
        for (Eigen::Index i = 0; i < a.rows(); ++i) {
            if (i != j) {
                sum += std::norm(a(i, j));
            }
        }
    }
    return std::sqrt(sum);
}

}  // namespace

void check_qubit_count(int n) {
    if (n < 0 || n > kMaxQubits) {
        throw Error(ErrorCode::kDimension,
                    "qubit count " + std::to_string(n) + " outside simulator cap [0, " +
                        std::to_string(kMaxQubits) + "]");
    }
}

double hermitian_defect(const ComplexMatrix &a) {
    if (a.rows() != a.cols()) {
        throw Error(ErrorCode::kDimension, "matrix is not square");
    }
    double worst = 0;
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = i; j < a.cols(); ++j) {
            worst = std::max(worst, std::abs(a(i, j) - std::conj(a(j, i))));
        }
    }
    return worst;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix &input) {
    if (input.rows() != input.cols()) {
        throw Error(ErrorCode::kDimension, "eigenvalues of a non-square matrix");
    }
    const Eigen::Index n = input.rows();
    ComplexMatrix a = (input + input.adjoint()) * 0.5;
    const double scale = std::max(1.0, a.norm());

    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        if (off_diagonal_norm(a) < kJacobiTolerance * scale) {
            break;
        }
        for (Eigen::Index p = 0; p + 1 < n; ++p) {
            for (Eigen::Index q = p + 1; q < n; ++q) {
                const double magnitude = std::abs(a(p, q));
                if (magnitude < 1e-300) {
                    continue;
                }
                // Rotate the phase of a(p, q) onto the real axis.
                const Complex w = a(p, q) / magnitude;
                a.col(q) *= std::conj(w);
                a.row(q) *= w;

                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double theta = (aqq - app) / (2.0 * magnitude);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                for (Eigen::Index k = 0; k < n; ++k) {
                    const Complex akp = a(k, p);
                    const Complex akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (Eigen::Index k = 0; k < n; ++k) {
                    const Complex apk = a(p, k);
                    const Complex aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                a(p, q) = 0;
                a(q, p) = 0;
            }
        }
    }

    std::vector<double> values(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) {
        values[static_cast<std::size_t>(i)] = a(i, i).real();
    }
    std::sort(values.begin(), values.end());
    return values;
}

double hermitian_trace_norm(const ComplexMatrix &a) {
    double total = 0;
    for (double lambda : hermitian_eigenvalues(a)) {
        total += std::abs(lambda);
    }
    return total;
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

}  // namespace qhe
