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

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>

#include "shadows/pauli_string.hpp"

namespace shadows {

/// Largest register handled by dense state vectors and operators.
inline constexpr size_t kMaxDenseQubits = 12;

/// Basis index k encodes qubit j in bit j (qubit 0 is least significant).
struct DenseState {
    size_t num_qubits = 0;
    Eigen::VectorXcd amplitudes;

    /// Validates the dimension and unit norm (to 1e-10).
    static DenseState from_amplitudes(size_t num_qubits, Eigen::VectorXcd amplitudes);
};

struct DenseOperator {
    size_t num_qubits = 0;
    Eigen::MatrixXcd matrix;

    /// Validates the dimension and, when `require_hermitian`, Hermiticity to 1e-12.
    static DenseOperator from_matrix(size_t num_qubits, Eigen::MatrixXcd matrix, bool require_hermitian = true);

    double trace() const { return matrix.trace().real(); }
};

/// Throws std::invalid_argument unless n is in [1, kMaxDenseQubits].
void check_dense_size(size_t num_qubits);

/// v <- P v.
void apply_pauli(const PauliString &p, Eigen::VectorXcd &v);
Eigen::MatrixXcd pauli_matrix(const PauliString &p);

/// Applies a 2x2 unitary to one qubit of v.
void apply_single_qubit(const Eigen::Matrix2cd &u, size_t qubit, Eigen::VectorXcd &v);

/// Multiplies by the conjugate of the first amplitude with |a| > 1e-9, so that
/// amplitude becomes real positive.
void fix_global_phase(Eigen::VectorXcd &v);

/// <psi| A |psi> (real part).
double expectation(const Eigen::MatrixXcd &a, const Eigen::VectorXcd &psi);

}  // namespace shadows
