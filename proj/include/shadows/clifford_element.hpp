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

#include "shadows/pauli_string.hpp"
#include "shadows/pauli_table.hpp"

namespace shadows {

/// A Clifford unitary U modulo global phase, stored as its action on the
/// Pauli generators:
///
///     U X_j U^dag = (-1)^{r_j} prod_i X_i^{alpha_ji} Z_i^{beta_ji}
///     U Z_j U^dag = (-1)^{s_j} prod_i X_i^{gamma_ji} Z_i^{delta_ji}
///
/// where each product is read as the Hermitian Pauli string with those x/z
/// bits (a qubit with both bits set carries Y). Image rows live in one table:
/// row j is the image of X_j and row n+j the image of Z_j.
class CliffordElement {
   public:
    CliffordElement() = default;
    /// The identity element.
    explicit CliffordElement(size_t num_qubits);

    static CliffordElement identity(size_t num_qubits) { return CliffordElement(num_qubits); }
    static CliffordElement hadamard(size_t num_qubits, size_t qubit);
    static CliffordElement phase_gate(size_t num_qubits, size_t qubit);
    static CliffordElement cnot(size_t num_qubits, size_t control, size_t target);
    /// Conjugation by a Pauli operator: only flips signs.
    static CliffordElement pauli(const PauliString &p);

    size_t num_qubits() const { return num_qubits_; }

    bool alpha(size_t j, size_t i) const { return get_bit(images_.x(j), i); }
    bool beta(size_t j, size_t i) const { return get_bit(images_.z(j), i); }
    bool gamma(size_t j, size_t i) const { return get_bit(images_.x(num_qubits_ + j), i); }
    bool delta(size_t j, size_t i) const { return get_bit(images_.z(num_qubits_ + j), i); }
    bool r(size_t j) const { return images_.phase(j) == 2; }
    bool s(size_t j) const { return images_.phase(num_qubits_ + j) == 2; }

    void set_alpha(size_t j, size_t i, bool v) { set_bit(images_.x(j), i, v); }
    void set_beta(size_t j, size_t i, bool v) { set_bit(images_.z(j), i, v); }
    void set_gamma(size_t j, size_t i, bool v) { set_bit(images_.x(num_qubits_ + j), i, v); }
    void set_delta(size_t j, size_t i, bool v) { set_bit(images_.z(num_qubits_ + j), i, v); }
    void set_r(size_t j, bool v) { images_.set_phase(j, v ? 2 : 0); }
    void set_s(size_t j, bool v) { images_.set_phase(num_qubits_ + j, v ? 2 : 0); }

    PauliString x_image(size_t j) const { return images_.row(j); }
    PauliString z_image(size_t j) const { return images_.row(num_qubits_ + j); }

    const PauliTable &images() const { return images_; }
    PauliTable &images() { return images_; }

    /// Symplectic condition on (alpha, beta, gamma, delta): images of X_j and
    /// Z_j anticommute, every other pair of images commutes. Also requires
    /// every image to carry a real sign.
    bool is_valid() const;

    bool operator==(const CliffordElement &other) const = default;

   private:
    size_t num_qubits_ = 0;
    PauliTable images_;
};

/// Applies U (.) U^dag row by row to Pauli strings. Caches the generator
/// images in X-before-Z form so each conjugation is a run of XORs plus one
/// parity per factor.
class PauliConjugator {
   public:
    explicit PauliConjugator(const CliffordElement &c);

    /// Conjugates (x, z, phase) and writes the result into (out_x, out_z);
    /// returns the output phase. Output spans must not alias the input.
    unsigned conjugate(std::span<const uint64_t> x, std::span<const uint64_t> z, unsigned phase,
                       std::span<uint64_t> out_x, std::span<uint64_t> out_z) const;

    PauliString operator()(const PauliString &p) const;

   private:
    const CliffordElement *clifford_;
    std::vector<uint8_t> xz_phase_;
};

/// U p U^dag.
PauliString conjugate_pauli(const CliffordElement &c, const PauliString &p);

/// The element acting as `outer` after `inner`, i.e. V = U_outer U_inner.
CliffordElement compose(const CliffordElement &outer, const CliffordElement &inner);

/// U^dag, with signs fixed so that compose(c, inverse(c)) is the identity.
CliffordElement inverse(const CliffordElement &c);

}  // namespace shadows
