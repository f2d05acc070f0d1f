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

#include "shadows/witness.hpp"

#include <cmath>
#include <stdexcept>

namespace shadows {

void validate_witness(const WitnessSpec &w) {
    for (const Eigen::Matrix2cd &u : w.locals) {
        if ((u * u.adjoint() - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() > 1e-12) {
            throw std::invalid_argument("witness local is not unitary");
        }
    }
}

Eigen::VectorXcd ghz3_vector() {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(8);
    v[0] = v[7] = 1.0 / std::sqrt(2.0);
    return v;
}

Eigen::VectorXcd witness_target(const WitnessSpec &w) {
    Eigen::VectorXcd v = ghz3_vector();
    for (size_t q = 0; q < 3; q++) {
        apply_single_qubit(w.locals[q], q, v);
    }
    return v;
}

DenseOperator witness_operator(const WitnessSpec &w) {
    Eigen::VectorXcd phi = witness_target(w);
    Eigen::MatrixXcd m = w.alpha * Eigen::MatrixXcd::Identity(8, 8) - phi * phi.adjoint();
    return DenseOperator::from_matrix(3, std::move(m));
}

double witness_value(const WitnessSpec &w, const DenseState &psi) {
    if (psi.num_qubits != 3) {
        throw std::invalid_argument("witnesses act on three qubits");
    }
    return w.alpha - std::norm(witness_target(w).dot(psi.amplitudes));
}

}  // namespace shadows
