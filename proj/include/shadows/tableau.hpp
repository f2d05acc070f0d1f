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

#include <cmath>
#include <cstdint>
#include <vector>

#include "shadows/bits.hpp"
#include "shadows/clifford_element.hpp"
#include "shadows/pauli_table.hpp"
#include "shadows/random_stream.hpp"

namespace shadows {

/// Destabilizer/stabilizer tableau of a pure n-qubit stabilizer state.
/// Rows 0..n-1 are destabilizers, rows n..2n-1 stabilizers; destabilizer i
/// pairs with stabilizer i.
class StabilizerTableau {
   public:
    StabilizerTableau() = default;
    /// The all-zeros state |0^n>.
    explicit StabilizerTableau(size_t num_qubits);

    /// The computational basis state |b>.
    static StabilizerTableau basis_state(const Bitstring &b);

    /// Builds the state fixed by n independent, commuting, Hermitian
    /// generators; destabilizers are completed by GF(2) elimination.
    /// Throws std::invalid_argument if the generators do not define a state.
    static StabilizerTableau from_stabilizers(const std::vector<PauliString> &stabilizers);

    size_t num_qubits() const { return num_qubits_; }

    PauliString destabilizer(size_t i) const { return rows_.row(i); }
    PauliString stabilizer(size_t i) const { return rows_.row(num_qubits_ + i); }
    std::vector<PauliString> stabilizers() const;

    const PauliTable &rows() const { return rows_; }
    PauliTable &rows() { return rows_; }

    bool operator==(const StabilizerTableau &other) const = default;

   private:
    size_t num_qubits_ = 0;
    PauliTable rows_;
};

/// Probability that is either 0 or exactly 2^-exponent.
struct DyadicProbability {
    bool is_zero = true;
    unsigned exponent = 0;

    double value() const { return is_zero ? 0.0 : std::ldexp(1.0, -static_cast<int>(exponent)); }
};

struct MeasurementResult {
    Bitstring outcome;
    StabilizerTableau state;
    /// Number of qubits whose outcome was a fair coin flip; the observed
    /// outcome had Born probability 2^-random_branches.
    size_t random_branches = 0;
};

/// U|psi> for every row of t conjugated by c.
StabilizerTableau apply_clifford(const StabilizerTableau &t, const CliffordElement &c);

/// Measures qubits 0..n-1 in the Z basis, in order. Random branches use the
/// lowest-index anticommuting stabilizer as pivot and one rng.coin() each.
MeasurementResult measure_all_z(StabilizerTableau t, RandomStream &rng);

/// |<b|psi_t>|^2 by walking the measurement with forced outcomes.
/// Worst case O(n^3 / 64) word operations.
DyadicProbability basis_state_probability(const StabilizerTableau &t, const Bitstring &b);

/// Checks Hermitian rows, the destabilizer/stabilizer commutation pattern and
/// full GF(2) rank of the 2n x 2n (x|z) matrix.
bool validate_tableau(const StabilizerTableau &t);

}  // namespace shadows
