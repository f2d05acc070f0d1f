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

#include <array>

#include "shadows/dense.hpp"

namespace shadows {

/// Three-qubit witness alpha*I - |phi><phi| with
/// |phi> = (V_A (x) V_B (x) V_C) |GHZ+>; V_A acts on qubit 0.
struct WitnessSpec {
    double alpha = 0.5;
    std::array<Eigen::Matrix2cd, 3> locals = {Eigen::Matrix2cd::Identity(), Eigen::Matrix2cd::Identity(),
                                              Eigen::Matrix2cd::Identity()};
};

/// Throws std::invalid_argument if a local is not unitary to 1e-12.
void validate_witness(const WitnessSpec &w);

/// (|000> + |111>) / sqrt(2).
Eigen::VectorXcd ghz3_vector();

/// |phi> = V_A (x) V_B (x) V_C |GHZ+>.
Eigen::VectorXcd witness_target(const WitnessSpec &w);

DenseOperator witness_operator(const WitnessSpec &w);

/// <psi| W |psi> = alpha - |<phi|psi>|^2.
double witness_value(const WitnessSpec &w, const DenseState &psi);

}  // namespace shadows
