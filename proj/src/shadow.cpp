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

#include "shadows/shadow.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "shadows/clifford_sampler.hpp"
#include "shadows/dense_oracle.hpp"
#include "shadows/parallel.hpp"
#include "shadows/tableau.hpp"

namespace shadows {

namespace {

Bitstring dense_outcome(const DenseState &state, const CliffordElement &c, RandomStream &rng) {
    size_t n = state.num_qubits;
    // Outcome b has probability |<b|U|psi>|^2 = |<U^dag b|psi>|^2.
    std::vector<double> probabilities(size_t{1} << n, 0.0);
    for_each_rotated_basis_state(c, [&](uint64_t b, const Eigen::VectorXcd &v) {
        probabilities[b] = std::norm(v.dot(state.amplitudes));
    });
    double u = rng.uniform();
    uint64_t chosen = probabilities.size() - 1;
    double cumulative = 0;
    for (uint64_t b = 0; b < probabilities.size(); b++) {
        cumulative += probabilities[b];
        if (u < cumulative) {
            chosen = b;
            break;
        }
    }
    while (probabilities[chosen] == 0 && chosen > 0) {
        chosen--;
    }
    Bitstring outcome(n);
    for (size_t q = 0; q < n; q++) {
        outcome.set(q, (chosen >> q) & 1);
    }
    return outcome;
}

}  // namespace

void validate_shadow(const ClassicalShadow &shadow) {
    for (size_t i = 0; i < shadow.snapshots.size(); i++) {
        const Snapshot &s = shadow.snapshots[i];
        if (s.clifford.num_qubits() != shadow.num_qubits || s.outcome.size() != shadow.num_qubits) {
            throw std::invalid_argument("snapshot " + std::to_string(i) + " does not act on " +
                                        std::to_string(shadow.num_qubits) + " qubits");
        }
        if (!s.clifford.is_valid()) {
            throw std::invalid_argument("snapshot " + std::to_string(i) + " holds a non-symplectic Clifford");
        }
    }
}

size_t draw_member_index(const StatePreparation &prep, RandomStream &rng) {
    if (std::holds_alternative<DenseState>(prep.source())) {
        throw std::invalid_argument("dense preparations have no stabilizer members");
    }
    const auto *members = std::get_if<StatePreparation::Ensemble>(&prep.source());
    if (members == nullptr || members->size() == 1) {
        return 0;
    }
    double u = rng.uniform();
    double cumulative = 0;
    for (size_t i = 0; i < members->size(); i++) {
        cumulative += (*members)[i].probability;
        if (u < cumulative) {
            return i;
        }
    }
    // Rounding can leave the cumulative sum a hair below 1.
    size_t last = members->size() - 1;
    while (last > 0 && (*members)[last].probability == 0) {
        last--;
    }
    return last;
}

const StabilizerTableau &stabilizer_member(const StatePreparation &prep, size_t index) {
    if (const auto *t = std::get_if<StabilizerTableau>(&prep.source())) {
        return *t;
    }
    return std::get<StatePreparation::Ensemble>(prep.source()).at(index).state;
}

Snapshot take_snapshot(const StatePreparation &prep, RandomStream &rng) {
    size_t n = prep.num_qubits();
    if (const auto *dense = std::get_if<DenseState>(&prep.source())) {
        CliffordElement c = sample_clifford(n, rng);
        Bitstring b = dense_outcome(*dense, c, rng);
        return {std::move(c), std::move(b)};
    }
    const StabilizerTableau &state = stabilizer_member(prep, draw_member_index(prep, rng));
    CliffordElement c = sample_clifford(n, rng);
    MeasurementResult m = measure_all_z(apply_clifford(state, c), rng);
    return {std::move(c), std::move(m.outcome)};
}

ClassicalShadow acquire_shadow(const StatePreparation &prep, size_t count, RandomStream &rng, size_t threads) {
    if (count == 0) {
        throw std::invalid_argument("need at least one snapshot");
    }
    if (std::holds_alternative<DenseState>(prep.source())) {
        check_dense_size(prep.num_qubits());
    }
    ClassicalShadow shadow;
    shadow.num_qubits = prep.num_qubits();
    shadow.seed = rng.seed();
    shadow.snapshots.resize(count);
    uint64_t base = rng();
    parallel_for(
        count,
        [&](size_t i) {
            RandomStream sub = RandomStream::derive(base, i);
            shadow.snapshots[i] = take_snapshot(prep, sub);
        },
        threads);
    return shadow;
}

}  // namespace shadows
