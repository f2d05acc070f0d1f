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

#include "shadows/pauli_string.hpp"

#include <stdexcept>

namespace shadows {

namespace {

void check_same_size(const PauliString &p, const PauliString &q) {
    if (p.num_qubits() != q.num_qubits()) {
        throw std::invalid_argument("Pauli strings act on different qubit counts: " +
                                    std::to_string(p.num_qubits()) + " vs " + std::to_string(q.num_qubits()));
    }
}

}  // namespace

PauliString::PauliString(size_t num_qubits)
    : num_qubits_(num_qubits), x_(words_for(num_qubits), 0), z_(words_for(num_qubits), 0) {}

PauliString PauliString::from_string(std::string_view text) {
    unsigned phase = 0;
    size_t pos = 0;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        phase = text[pos] == '-' ? 2 : 0;
        pos++;
    }
    if (pos < text.size() && text[pos] == 'i') {
        phase += 1;
        pos++;
    }
    PauliString result(text.size() - pos);
    result.set_phase(phase);
    for (size_t q = 0; pos + q < text.size(); q++) {
        char c = text[pos + q];
        if (c == '_') {
            c = 'I';
        }
        if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') {
            throw std::invalid_argument("bad Pauli character '" + std::string(1, c) + "' in \"" + std::string(text) +
                                        "\"");
        }
        result.set_pauli(q, c);
    }
    return result;
}

PauliString PauliString::single(size_t num_qubits, size_t qubit, char pauli) {
    if (qubit >= num_qubits) {
        throw std::out_of_range("qubit index out of range");
    }
    PauliString result(num_qubits);
    result.set_pauli(qubit, pauli);
    return result;
}

void PauliString::set_pauli(size_t q, char pauli) {
    switch (pauli) {
        case 'I':
            set_bit(x_, q, false);
            set_bit(z_, q, false);
            break;
        case 'X':
            set_bit(x_, q, true);
            set_bit(z_, q, false);
            break;
        case 'Y':
            set_bit(x_, q, true);
            set_bit(z_, q, true);
            break;
        case 'Z':
            set_bit(x_, q, false);
            set_bit(z_, q, true);
            break;
        default:
            throw std::invalid_argument("bad Pauli character");
    }
}

size_t PauliString::weight() const {
    size_t total = 0;
    for (size_t w = 0; w < x_.size(); w++) {
        total += std::popcount(x_[w] | z_[w]);
    }
    return total;
}

PauliString &PauliString::operator*=(const PauliString &rhs) {
    check_same_size(*this, rhs);
    unsigned delta = detail::product_phase(x_, z_, rhs.x_, rhs.z_);
    phase_ = (phase_ + rhs.phase_ + delta) & 3;
    xor_into(x_, rhs.x_);
    xor_into(z_, rhs.z_);
    return *this;
}

PauliString PauliString::operator*(const PauliString &rhs) const {
    PauliString result = *this;
    result *= rhs;
    return result;
}

bool PauliString::commutes(const PauliString &other) const {
    check_same_size(*this, other);
    return !detail::anticommutes(x_, z_, other.x_, other.z_);
}

std::string PauliString::to_string() const {
    static constexpr const char *kPrefix[4] = {"+", "+i", "-", "-i"};
    std::string result = kPrefix[phase_];
    for (size_t q = 0; q < num_qubits_; q++) {
        result.push_back(pauli_at(q));
    }
    return result;
}

PauliString pauli_multiply(const PauliString &p, const PauliString &q) { return p * q; }

bool pauli_commutes(const PauliString &p, const PauliString &q) { return p.commutes(q); }

}  // namespace shadows
