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
#include <vector>

#include "shadows/bits.hpp"
#include "shadows/clifford_element.hpp"
#include "shadows/random_stream.hpp"
#include "shadows/state_preparation.hpp"

namespace shadows {

inline constexpr uint32_t kShadowFormatVersion = 1;

/// One randomized measurement: the state was rotated by U = `clifford` and
/// the computational-basis outcome `outcome` observed. It stands for the
/// stabilizer state U^dag |outcome>.
struct Snapshot {
    CliffordElement clifford;
    Bitstring outcome;

    bool operator==(const Snapshot &other) const = default;
};

struct ClassicalShadow {
    size_t num_qubits = 0;
    std::vector<Snapshot> snapshots;
    uint64_t seed = 0;
    uint32_t format_version = kShadowFormatVersion;

    size_t size() const { return snapshots.size(); }
    bool operator==(const ClassicalShadow &other) const = default;
};

/// Throws std::invalid_argument if any snapshot has the wrong size or an
/// invalid Clifford element.
void validate_shadow(const ClassicalShadow &shadow);

/// Index of the ensemble member drawn for one copy of the state (always 0 for
/// a pure tableau). Throws for dense preparations.
size_t draw_member_index(const StatePreparation &prep, RandomStream &rng);

/// Ensemble member `index` (or the pure tableau).
const StabilizerTableau &stabilizer_member(const StatePreparation &prep, size_t index);

/// Measures one freshly drawn copy of the prepared state in a random
/// Clifford basis.
Snapshot take_snapshot(const StatePreparation &prep, RandomStream &rng);

/// Acquires `count` snapshots. Snapshot i draws from its own stream derived
/// from (base, i), where base is the next draw of `rng`; the result is
/// identical for any thread count. `threads` = 0 uses all hardware threads.
ClassicalShadow acquire_shadow(const StatePreparation &prep, size_t count, RandomStream &rng, size_t threads = 0);

}  // namespace shadows
