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

#include "shadows/pauli_table.hpp"

#include <algorithm>
#include <stdexcept>

namespace shadows {

PauliTable::PauliTable(size_t num_qubits, size_t num_rows)
    : num_qubits_(num_qubits),
      num_rows_(num_rows),
      num_words_(words_for(num_qubits)),
      data_(num_rows * 2 * words_for(num_qubits), 0),
      phases_(num_rows, 0) {}

PauliString PauliTable::row(size_t r) const {
    PauliString result(num_qubits_);
    std::ranges::copy(x(r), result.x().begin());
    std::ranges::copy(z(r), result.z().begin());
    result.set_phase(phases_[r]);
    return result;
}

void PauliTable::set_row(size_t r, const PauliString &p) {
    if (p.num_qubits() != num_qubits_) {
        throw std::invalid_argument("Pauli string size does not match table");
    }
    std::ranges::copy(p.x(), x(r).begin());
    std::ranges::copy(p.z(), z(r).begin());
    phases_[r] = p.phase();
}

void PauliTable::copy_row(size_t dst, size_t src) {
    std::ranges::copy(x(src), x(dst).begin());
    std::ranges::copy(z(src), z(dst).begin());
    phases_[dst] = phases_[src];
}

void PauliTable::clear_row(size_t r) {
    std::ranges::fill(x(r), 0);
    std::ranges::fill(z(r), 0);
    phases_[r] = 0;
}

void PauliTable::multiply_into(size_t dst, size_t src) {
    unsigned delta = detail::product_phase(x(dst), z(dst), x(src), z(src));
    phases_[dst] = (phases_[dst] + phases_[src] + delta) & 3;
    xor_into(x(dst), x(src));
    xor_into(z(dst), z(src));
}

void PauliTable::xor_row(size_t dst, size_t src) {
    xor_into(x(dst), x(src));
    xor_into(z(dst), z(src));
}

void PauliTable::multiply_into(PauliString &dst, size_t src) const {
    unsigned delta = detail::product_phase(dst.x(), dst.z(), x(src), z(src));
    dst.set_phase(dst.phase() + phases_[src] + delta);
    xor_into(dst.x(), x(src));
    xor_into(dst.z(), z(src));
}

}  // namespace shadows
