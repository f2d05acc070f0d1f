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

#include <cstdint>
#include <functional>
#include <vector>

#include "shadows/clifford_element.hpp"
#include "shadows/dense.hpp"
#include "shadows/random_stream.hpp"
#include "shadows/tableau.hpp"
#include "shadows/witness.hpp"

// Exact small-register reference computations. Everything here works on
// explicit 2^n-dimensional vectors and is used to cross-check the stabilizer
// engine and the estimator statistics.

namespace shadows {

/// The unit vector stabilized by every stabilizer row of t, obtained by
/// projecting a fixed pseudo-random vector with prod_j (I + S_j)/2. The
/// global phase makes the first nonzero amplitude real positive.
DenseState tableau_to_dense(const StabilizerTableau &t);

/// A unitary U (up to global phase) with U X_j U^dag and U Z_j U^dag equal to
/// the stored images. Throws std::invalid_argument if the element is not
/// symplectic, if n > 6, or if the conjugation residual exceeds 1e-10.
DenseOperator clifford_to_dense(const CliffordElement &c);

/// U^dag |b>, the stabilizer state recorded by a snapshot.
DenseState rotated_basis_state(const CliffordElement &c, const Bitstring &b);

/// Calls fn(b, U^dag |b>) for every b in {0,1}^n, in Gray-code order. b is the
/// integer whose bit j is outcome bit j. O(4^n) total.
void for_each_rotated_basis_state(const CliffordElement &c,
                                  const std::function<void(uint64_t, const Eigen::VectorXcd &)> &fn);

/// Every CliffordElement on n <= 2 qubits: all symplectic (alpha, beta,
/// gamma, delta) found by filtering candidate matrices, times all sign vectors.
std::vector<CliffordElement> enumerate_cliffords(size_t num_qubits);

/// Every stabilizer state on n <= 3 qubits (6, 60, 1080), as tableaus.
std::vector<StabilizerTableau> enumerate_stabilizer_tableaus(size_t num_qubits);
std::vector<DenseState> enumerate_stabilizer_states(size_t num_qubits);

struct SnapshotMoments {
    double mean = 0;
    double variance = 0;
    /// Sum of outcome probabilities over the enumeration; 1 up to rounding.
    double total_probability = 0;
};

/// Exact mean and variance of (2^n + 1) <s|O|s> - tr(O) when s = U^dag|b>
/// with U uniform over all CliffordElements and b drawn by Born's rule from
/// U rho U^dag. Throws std::invalid_argument for n > 2.
SnapshotMoments exact_snapshot_moments(const DenseOperator &rho, const DenseOperator &observable);

struct DirectMeasurementOptions {
    uint64_t min_shots = 10;
    uint64_t max_shots = 10'000'000;
};

struct DirectMeasurementResult {
    double estimate = 0;
    uint64_t samples_used = 0;
    double projector_frequency = 0;
};

/// Simulates repeated two-outcome measurement of the rank-one part of the
/// witness: Bernoulli shots with success probability |<phi|psi>|^2, stopping
/// once the binomial standard error drops below `epsilon` (never before
/// `min_shots`). Returns alpha - p_hat and the number of shots.
DirectMeasurementResult direct_witness_measurement(const DenseState &state, const WitnessSpec &w, double epsilon,
                                                   RandomStream &rng, const DirectMeasurementOptions &options = {});

}  // namespace shadows
