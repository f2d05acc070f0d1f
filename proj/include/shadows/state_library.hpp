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
#include <vector>

#include "shadows/dense.hpp"
#include "shadows/random_stream.hpp"
#include "shadows/state_preparation.hpp"
#include "shadows/tableau.hpp"
#include "shadows/witness.hpp"

namespace shadows {

/// (|0...0> + sign |1...1>) / sqrt(2), stabilized by sign*X...X and Z_j Z_{j+1}.
StabilizerTableau ghz_tableau(size_t num_qubits, int sign = +1);

/// rho_p = (1 - p) |GHZ+><GHZ+| + p |GHZ-><GHZ-|.
StatePreparation noisy_ghz_ensemble(size_t num_qubits, double p);

/// Edge labelling of an L x L periodic square lattice with one qubit per
/// edge. Horizontal edge (r, c) joins vertices (r, c) and (r, c+1) and has
/// index r*L + c; vertical edge (r, c) joins (r, c) and (r+1, c) and has index
/// L*L + r*L + c.
struct ToricLattice {
    size_t size = 0;

    explicit ToricLattice(size_t linear_size);

    size_t num_qubits() const { return 2 * size * size; }
    size_t horizontal_edge(size_t row, size_t col) const;
    size_t vertical_edge(size_t row, size_t col) const;

    /// The four edges meeting at vertex (row, col).
    std::vector<size_t> star(size_t row, size_t col) const;
    /// The four edges bounding the face whose top-left vertex is (row, col).
    std::vector<size_t> plaquette(size_t row, size_t col) const;
    /// Non-contractible loops: vertical edges of column 0, horizontal edges of row 0.
    std::vector<size_t> vertical_loop() const;
    std::vector<size_t> horizontal_loop() const;
};

/// Toric-code ground state in the logical |00> sector: stabilized by every
/// X-star, every Z-plaquette and Z along both loops of the torus. Uses
/// L^2 - 1 stars, L^2 - 1 plaquettes and the two loops as generators.
StabilizerTableau toric_code_tableau(size_t linear_size);

/// Haar-random 2x2 unitary (QR of a complex Ginibre matrix, phases fixed by
/// the diagonal of R).
Eigen::Matrix2cd haar_unitary_2x2(RandomStream &rng);

/// (U_A (x) U_B (x) U_C) |GHZ+> with Haar-random locals.
DenseState random_rotated_ghz3(RandomStream &rng);

/// Witness with Haar-random locals. alpha must be 0.5 (genuine tripartite
/// entanglement) or 0.75 (GHZ-class entanglement).
WitnessSpec random_witness(RandomStream &rng, double alpha);

/// Parses "ghz:<n>", "ghz-:<n>", "noisy-ghz:<n>:<p>", "toric:<L>" or
/// "rotated-ghz3:<seed>". Throws std::invalid_argument on malformed input.
StatePreparation parse_state_spec(const std::string &spec);

/// Pure stabilizer target named by a spec ("ghz:<n>", "ghz-:<n>",
/// "toric:<L>"); throws for mixed or dense specs.
StabilizerTableau parse_stabilizer_spec(const std::string &spec);

}  // namespace shadows
