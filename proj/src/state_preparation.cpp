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

#include "shadows/state_preparation.hpp"

#include <cmath>
#include <stdexcept>

#include "shadows/dense_oracle.hpp"

namespace shadows {

StatePreparation StatePreparation::pure(StabilizerTableau state) {
    size_t n = state.num_qubits();
    return StatePreparation(n, std::move(state));
}

StatePreparation StatePreparation::ensemble(Ensemble members) {
    if (members.empty()) {
        throw std::invalid_argument("ensemble needs at least one member");
    }
    size_t n = members.front().state.num_qubits();
    double total = 0;
    for (const EnsembleMember &m : members) {
        if (!(m.probability >= 0)) {
            throw std::invalid_argument("ensemble probabilities must be nonnegative");
        }
        if (m.state.num_qubits() != n) {
            throw std::invalid_argument("ensemble members act on different qubit counts");
        }
        total += m.probability;
    }
    if (std::abs(total - 1.0) > 1e-12) {
        throw std::invalid_argument("ensemble probabilities must sum to 1");
    }
    return StatePreparation(n, std::move(members));
}

StatePreparation StatePreparation::dense(DenseState state) {
    check_dense_size(state.num_qubits);
    size_t n = state.num_qubits;
    return StatePreparation(n, std::move(state));
}

Eigen::MatrixXcd StatePreparation::density_matrix() const {
    check_dense_size(num_qubits_);
    if (const auto *t = std::get_if<StabilizerTableau>(&source_)) {
        Eigen::VectorXcd v = tableau_to_dense(*t).amplitudes;
        return v * v.adjoint();
    }
    if (const auto *members = std::get_if<Ensemble>(&source_)) {
        Eigen::Index dim = Eigen::Index{1} << num_qubits_;
        Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dim, dim);
        for (const EnsembleMember &m : *members) {
            Eigen::VectorXcd v = tableau_to_dense(m.state).amplitudes;
            rho += m.probability * v * v.adjoint();
        }
        return rho;
    }
    const DenseState &d = std::get<DenseState>(source_);
    return d.amplitudes * d.amplitudes.adjoint();
}

}  // namespace shadows
