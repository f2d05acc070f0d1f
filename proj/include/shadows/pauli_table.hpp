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
#include <span>
#include <vector>

#include "shadows/pauli_string.hpp"

namespace shadows {

/// A list of n-qubit Pauli strings stored contiguously. Row r occupies
/// 2*W consecutive words (W x-words followed by W z-words). This is the
/// shared storage behind stabilizer tableaus and Clifford generator images.
class PauliTable {
   public:
    PauliTable() = default;
    PauliTable(size_t num_qubits, size_t num_rows);

    size_t num_qubits() const { return num_qubits_; }
    size_t num_rows() const { return num_rows_; }
    size_t num_words() const { return num_words_; }

    std::span<uint64_t> x(size_t r) { return {data_.data() + r * 2 * num_words_, num_words_}; }
    std::span<uint64_t> z(size_t r) { return {data_.data() + (r * 2 + 1) * num_words_, num_words_}; }
    std::span<const uint64_t> x(size_t r) const { return {data_.data() + r * 2 * num_words_, num_words_}; }
    std::span<const uint64_t> z(size_t r) const { return {data_.data() + (r * 2 + 1) * num_words_, num_words_}; }

    uint8_t phase(size_t r) const { return phases_[r]; }
    void set_phase(size_t r, unsigned phase) { phases_[r] = phase & 3; }

    PauliString row(size_t r) const;
    void set_row(size_t r, const PauliString &p);
    void copy_row(size_t dst, size_t src);
    void clear_row(size_t r);

    /// row[dst] <- row[dst] * row[src].
    void multiply_into(size_t dst, size_t src);
    /// XORs the bits of row[src] into row[dst]; the phase of dst is untouched.
    void xor_row(size_t dst, size_t src);
    /// dst <- dst * row[src].
    void multiply_into(PauliString &dst, size_t src) const;

    bool anticommute(size_t a, size_t b) const { return detail::anticommutes(x(a), z(a), x(b), z(b)); }

    bool operator==(const PauliTable &other) const = default;

   private:
    size_t num_qubits_ = 0;
    size_t num_rows_ = 0;
    size_t num_words_ = 0;
    std::vector<uint64_t> data_;
    std::vector<uint8_t> phases_;
};

}  // namespace shadows
