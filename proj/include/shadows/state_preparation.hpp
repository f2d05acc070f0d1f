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

#include <variant>
#include <vector>

#include "shadows/dense.hpp"
#include "shadows/tableau.hpp"

namespace shadows {

struct EnsembleMember {
    double probability = 0;
    StabilizerTableau state;
};

/// Source of fresh copies of rho: a pure stabilizer state, a mixture of pure
/// stabilizer states (rho = sum_i p_i |psi_i><psi_i|), or a dense state
/// vector for n <= 12.
class StatePreparation {
   public:
    using Ensemble = std::vector<EnsembleMember>;
    using Source = std::variant<StabilizerTableau, Ensemble, DenseState>;

    static StatePreparation pure(StabilizerTableau state);
    /// Probabilities must be nonnegative and sum to 1 within 1e-12.
    static StatePreparation ensemble(Ensemble members);
    static StatePreparation dense(DenseState state);

    size_t num_qubits() const { return num_qubits_; }
    const Source &source() const { return source_; }

    /// Density matrix, for n <= 12.
    Eigen::MatrixXcd density_matrix() const;

   private:
    StatePreparation(size_t num_qubits, Source source) : num_qubits_(num_qubits), source_(std::move(source)) {}

    size_t num_qubits_ = 0;
    Source source_;
};

}  // namespace shadows
