// Copyright 2026 The Shadows Authors
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

#include "shadows/dense.hpp"

#include <stdexcept>
#include <string>

namespace shadows {

namespace {

constexpr std::complex<double> kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

uint64_t low_mask(const std::span<const uint64_t> words) { return words.empty() ? 0 : words[0]; }

}  // namespace

void check_dense_size(size_t num_qubits) {
    if (num_qubits == 0 || num_qubits > kMaxDenseQubits) {
        throw std::invalid_argument("dense representation supports 1.." + std::to_string(kMaxDenseQubits) +
                                    " qubits, got " + std::to_string(num_qubits));
    }
}

DenseState DenseState::from_amplitudes(size_t num_qubits, Eigen::VectorXcd amplitudes) {
    check_dense_size(num_qubits);
    if (amplitudes.size() != (Eigen::Index{1} << num_qubits)) {
        throw std::invalid_argument("amplitude vector has wrong dimension");
    }
    if (std::abs(amplitudes.norm() - 1.0) > 1e-10) {
        throw std::invalid_argument("state vector is not normalized");
    }
    return {num_qubits, std::move(amplitudes)};
}

DenseOperator DenseOperator::from_matrix(size_t num_qubits, Eigen::MatrixXcd matrix, bool require_hermitian) {
    check_dense_size(num_qubits);
    Eigen::Index dim = Eigen::Index{1} << num_qubits;
    if (matrix.rows() != dim || matrix.cols() != dim) {
        throw std::invalid_argument("operator has wrong dimension");
    }
    if (require_hermitian && (matrix - matrix.adjoint()).cwiseAbs().maxCoeff() > 1e-12) {
        throw std::invalid_argument("operator is not Hermitian");
    }
    return {num_qubits, std::move(matrix)};
}

void apply_pauli(const PauliString &p, Eigen::VectorXcd &v) {
    check_dense_size(p.num_qubits());
    if (v.size() != (Eigen::Index{1} << p.num_qubits())) {
        throw std::invalid_argument("vector dimension does not match Pauli string");
    }
    // sigma(x,z)|k> = i^(x.z) (-1)^(z.k) |k ^ x>, per qubit.
    uint64_t xm = low_mask(p.x());
    uint64_t zm = low_mask(p.z());
    std::complex<double> base = kIPow[(p.phase() + std::popcount(xm & zm)) & 3];
    Eigen::VectorXcd out(v.size());
    for (uint64_t k = 0; k < static_cast<uint64_t>(v.size()); k++) {
        double sign = (std::popcount(zm & k) & 1) ? -1.0 : 1.0;
        out[static_cast<Eigen::Index>(k ^ xm)] = base * sign * v[static_cast<Eigen::Index>(k)];
    }
    v = std::move(out);
}

Eigen::MatrixXcd pauli_matrix(const PauliString &p) {
    check_dense_size(p.num_qubits());
    Eigen::Index dim = Eigen::Index{1} << p.num_qubits();
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    for (Eigen::Index k = 0; k < dim; k++) {
        Eigen::VectorXcd e = Eigen::VectorXcd::Zero(dim);
        e[k] = 1;
        apply_pauli(p, e);
        m.col(k) = e;
    }
    return m;
}

void apply_single_qubit(const Eigen::Matrix2cd &u, size_t qubit, Eigen::VectorXcd &v) {
    uint64_t bit = uint64_t{1} << qubit;
    for (uint64_t k = 0; k < static_cast<uint64_t>(v.size()); k++) {
        if (k & bit) {
            continue;
        }
        auto i0 = static_cast<Eigen::Index>(k);
        auto i1 = static_cast<Eigen::Index>(k | bit);
        std::complex<double> a0 = v[i0];
        std::complex<double> a1 = v[i1];
        v[i0] = u(0, 0) * a0 + u(0, 1) * a1;
        v[i1] = u(1, 0) * a0 + u(1, 1) * a1;
    }
}

void fix_global_phase(Eigen::VectorXcd &v) {
    for (Eigen::Index k = 0; k < v.size(); k++) {
        if (std::abs(v[k]) > 1e-9) {
            v *= std::conj(v[k]) / std::abs(v[k]);
            v[k] = std::abs(v[k]);
            return;
        }
    }
}

double expectation(const Eigen::MatrixXcd &a, const Eigen::VectorXcd &psi) { return psi.dot(a * psi).real(); }

}  // namespace shadows
