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

#include <string>
#include <variant>

#include "shadows/dense.hpp"
#include "shadows/shadow.hpp"
#include "shadows/tableau.hpp"
#include "shadows/witness.hpp"

namespace shadows {

/// O = |psi><psi| for a pure stabilizer state psi.
struct StabilizerFidelity {
    StabilizerTableau target;
};

struct DenseHermitian {
    DenseOperator op;
};

/// O = alpha I - |phi><phi| with phi = (V_A (x) V_B (x) V_C) |GHZ+>, n = 3.
struct Witness {
    WitnessSpec spec;
    Eigen::VectorXcd target;
};

class Observable {
   public:
    using Kind = std::variant<StabilizerFidelity, DenseHermitian, Witness>;

    static Observable fidelity(StabilizerTableau target);
    /// Throws unless the matrix is Hermitian to 1e-12 and n <= 12.
    static Observable dense(DenseOperator op);
    static Observable witness(const WitnessSpec &spec);

    size_t num_qubits() const { return num_qubits_; }
    const Kind &kind() const { return kind_; }
    std::string kind_name() const;

    /// tr(O).
    double trace() const;
    /// tr(O^2); exact for fidelities, evaluated numerically otherwise.
    double hs_norm_squared() const;
    /// 2^n x 2^n matrix (n <= 12).
    Eigen::MatrixXcd matrix() const;

   private:
    Observable(size_t num_qubits, Kind kind) : num_qubits_(num_qubits), kind_(std::move(kind)) {}

    size_t num_qubits_ = 0;
    Kind kind_;
};

/// Single-snapshot estimate tr(O rho_hat) with rho_hat = (2^n + 1) U^dag|b><b|U - I.
double snapshot_estimate(const Snapshot &s, const Observable &obs);

/// Same as snapshot_estimate for a fidelity target, given the probability
/// |<b|U|target>|^2.
double fidelity_estimate(size_t num_qubits, const DyadicProbability &p);

/// Evaluates many observables against one snapshot, sharing the rotated
/// basis vector between dense observables.
class SnapshotEvaluator {
   public:
    explicit SnapshotEvaluator(const Snapshot &s);

    double estimate(const Observable &obs);

   private:
    const Snapshot *snapshot_;
    bool have_vector_ = false;
    Eigen::VectorXcd vector_;
};

}  // namespace shadows
