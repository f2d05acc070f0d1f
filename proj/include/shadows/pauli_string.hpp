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

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "shadows/bits.hpp"

namespace shadows {

namespace detail {

// Power of i picked up by sigma(x1,z1) * sigma(x2,z2), where sigma(1,1) = Y.
// Writing Y = iXZ moves both factors into X-before-Z form, after which
// Z^z1 X^x2 = (-1)^(z1.x2) X^x2 Z^z1.
inline unsigned product_phase(std::span<const uint64_t> x1, std::span<const uint64_t> z1,
                              std::span<const uint64_t> x2, std::span<const uint64_t> z2) {
    unsigned total = 0;
    for (size_t w = 0; w < x1.size(); w++) {
        total += std::popcount(x1[w] & z1[w]);
        total += std::popcount(x2[w] & z2[w]);
        total += 2 * std::popcount(z1[w] & x2[w]);
        total += 3 * std::popcount((x1[w] ^ x2[w]) & (z1[w] ^ z2[w]));
    }
    return total & 3;
}

inline bool anticommutes(std::span<const uint64_t> x1, std::span<const uint64_t> z1, std::span<const uint64_t> x2,
                         std::span<const uint64_t> z2) {
    uint64_t acc = 0;
    for (size_t w = 0; w < x1.size(); w++) {
        acc ^= (x1[w] & z2[w]) ^ (z1[w] & x2[w]);
    }
    return std::popcount(acc) & 1;
}

}  // namespace detail

/// An n-qubit Pauli operator i^phase * (sigma_0 (x) ... (x) sigma_{n-1}), where
/// qubit j carries I, X, Z or Y for (x_j, z_j) = (0,0), (1,0), (0,1), (1,1).
/// Hermitian strings are exactly those with even phase.
class PauliString {
   public:
    PauliString() = default;
    explicit PauliString(size_t num_qubits);

    /// Parses "+XIZ", "-YY", "iX", "-iZZ" style text. Sign prefix is optional.
    static PauliString from_string(std::string_view text);
    /// Single-qubit operator `pauli` ('X', 'Y' or 'Z') on qubit q.
    static PauliString single(size_t num_qubits, size_t qubit, char pauli);

    size_t num_qubits() const { return num_qubits_; }
    uint8_t phase() const { return phase_; }
    void set_phase(unsigned phase) { phase_ = phase & 3; }
    bool is_hermitian() const { return (phase_ & 1) == 0; }

    bool x_bit(size_t q) const { return get_bit(x_, q); }
    bool z_bit(size_t q) const { return get_bit(z_, q); }
    char pauli_at(size_t q) const { return "IXZY"[x_bit(q) + 2 * z_bit(q)]; }
    void set_pauli(size_t q, char pauli);

    std::span<uint64_t> x() { return x_; }
    std::span<uint64_t> z() { return z_; }
    std::span<const uint64_t> x() const { return x_; }
    std::span<const uint64_t> z() const { return z_; }

    /// Number of non-identity tensor factors.
    size_t weight() const;

    PauliString &operator*=(const PauliString &rhs);
    PauliString operator*(const PauliString &rhs) const;
    bool commutes(const PauliString &other) const;

    std::string to_string() const;

    bool operator==(const PauliString &other) const = default;

   private:
    size_t num_qubits_ = 0;
    uint8_t phase_ = 0;
    std::vector<uint64_t> x_;
    std::vector<uint64_t> z_;
};

/// Operator product p*q with the phase tracked mod 4.
PauliString pauli_multiply(const PauliString &p, const PauliString &q);

/// True iff the symplectic product <p.x, q.z> + <p.z, q.x> vanishes mod 2.
bool pauli_commutes(const PauliString &p, const PauliString &q);

}  // namespace shadows
