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

#include "shadows/clifford_element.hpp"
#include "shadows/random_stream.hpp"

namespace shadows {

/// Draws a CliffordElement uniformly from the n-qubit Clifford group modulo
/// global phase: a uniform symplectic matrix built from one random
/// transvection layer per qubit (the Koenig-Smolin construction), followed
/// by independent uniform sign vectors r and s. Uses O(n^2) random bits and
/// O(n^3 / 64) word operations. Throws std::invalid_argument for n = 0.
CliffordElement sample_clifford(size_t num_qubits, RandomStream &rng);

/// |STAB_n| = 2^n prod_{j=1..n} (2^j + 1). Throws std::overflow_error when
/// the count does not fit in 64 bits.
uint64_t count_stabilizer_states(size_t num_qubits);

/// |Sp(2n, 2)| = 2^{n^2} prod_{j=1..n} (4^j - 1). Throws std::overflow_error
/// when the count does not fit in 64 bits.
uint64_t count_symplectic_group(size_t num_qubits);

}  // namespace shadows
